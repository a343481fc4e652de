data Nat = Zero | Succ(Nat)
data List(A) = Nil | Cons(A, List(A))
data B = MkB
