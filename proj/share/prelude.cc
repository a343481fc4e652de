data Bool = True | False
data Nat = Zero | Succ(Nat)
data List = Nil | Cons(Nat, List)
data Tree = Leaf | Join(Nat, Tree, Tree)

name ItCBN_Nat_Nat : Nat -> (Nat -> Nat) -> Nat -> _|_ -> (Nat -> _|_) -> _|_
name ItCBN_Nat_Nat_Zero : Nat -> (Nat -> Nat) -> _|_ -> (Nat -> _|_) -> _|_
name ItCBN_Nat_Nat_Succ : Nat -> (Nat -> Nat) -> _|_ -> (Nat -> _|_) -> Nat -> _|_
rule ItCBN_Nat_Nat.f1.f2.x.c1.c2 -> x.(ItCBN_Nat_Nat_Zero.f1.f2.c1.c2).(ItCBN_Nat_Nat_Succ.f1.f2.c1.c2)
rule ItCBN_Nat_Nat_Zero.f1.f2.c1.c2 -> f1.c1.c2
rule ItCBN_Nat_Nat_Succ.f1.f2.c1.c2.x1 -> f2.(ItCBN_Nat_Nat.f1.f2.x1).c1.c2

name ItCBV_Nat_Nat : ((Nat -> _|_) -> _|_) -> (Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> Nat -> _|_
name ItCBV_Nat_Nat_Zero_1 : ((Nat -> _|_) -> _|_) -> (Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> _|_
name ItCBV_Nat_Nat_Succ_1 : ((Nat -> _|_) -> _|_) -> (Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> Nat -> _|_
name ItCBV_Nat_Nat_Succ_2 : ((Nat -> _|_) -> _|_) -> (Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> Nat -> _|_
rule ItCBV_Nat_Nat.f1.f2.c.x -> x.(ItCBV_Nat_Nat_Zero_1.f1.f2.c).(ItCBV_Nat_Nat_Succ_1.f1.f2.c)
rule ItCBV_Nat_Nat_Zero_1.f1.f2.c -> f1.c
rule ItCBV_Nat_Nat_Succ_1.f1.f2.c.x1 -> ItCBV_Nat_Nat.f1.f2.(ItCBV_Nat_Nat_Succ_2.f1.f2.c).x1
rule ItCBV_Nat_Nat_Succ_2.f1.f2.c.r1 -> f2.r1.c

name ItCBN_List_Nat : Nat -> (Nat -> Nat -> Nat) -> List -> _|_ -> (Nat -> _|_) -> _|_
name ItCBN_List_Nat_Nil : Nat -> (Nat -> Nat -> Nat) -> _|_ -> (Nat -> _|_) -> _|_
name ItCBN_List_Nat_Cons : Nat -> (Nat -> Nat -> Nat) -> _|_ -> (Nat -> _|_) -> Nat -> List -> _|_
rule ItCBN_List_Nat.f1.f2.x.c1.c2 -> x.(ItCBN_List_Nat_Nil.f1.f2.c1.c2).(ItCBN_List_Nat_Cons.f1.f2.c1.c2)
rule ItCBN_List_Nat_Nil.f1.f2.c1.c2 -> f1.c1.c2
rule ItCBN_List_Nat_Cons.f1.f2.c1.c2.x1.x2 -> f2.x1.(ItCBN_List_Nat.f1.f2.x2).c1.c2

name ItCBV_List_Nat : ((Nat -> _|_) -> _|_) -> (Nat -> Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> List -> _|_
name ItCBV_List_Nat_Nil_1 : ((Nat -> _|_) -> _|_) -> (Nat -> Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> _|_
name ItCBV_List_Nat_Cons_1 : ((Nat -> _|_) -> _|_) -> (Nat -> Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> Nat -> List -> _|_
name ItCBV_List_Nat_Cons_2 : ((Nat -> _|_) -> _|_) -> (Nat -> Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> List -> Nat -> _|_
name ItCBV_List_Nat_Cons_3 : ((Nat -> _|_) -> _|_) -> (Nat -> Nat -> (Nat -> _|_) -> _|_) -> (Nat -> _|_) -> Nat -> Nat -> _|_
rule ItCBV_List_Nat.f1.f2.c.x -> x.(ItCBV_List_Nat_Nil_1.f1.f2.c).(ItCBV_List_Nat_Cons_1.f1.f2.c)
rule ItCBV_List_Nat_Nil_1.f1.f2.c -> f1.c
rule ItCBV_List_Nat_Cons_1.f1.f2.c.x1.x2 -> ItCBV_List_Nat_Cons_2.f1.f2.c.x2.x1
rule ItCBV_List_Nat_Cons_2.f1.f2.c.x2.r1 -> ItCBV_List_Nat.f1.f2.(ItCBV_List_Nat_Cons_3.f1.f2.c.r1).x2
rule ItCBV_List_Nat_Cons_3.f1.f2.c.r1.r2 -> f2.r1.r2.c

name Id : _|_ -> _|_
rule Id.x -> x
name F1 : Nat -> (Nat -> _|_) -> _|_
rule F1.x.c -> c.x
name F2 : Nat -> (Nat -> _|_) -> _|_
rule F2.x.c -> c.(Succ.x)
name AddCBV : Nat -> Nat -> (Nat -> _|_) -> _|_
rule AddCBV.n.m.c -> n.(c.m).(AddCBV'.m.c)
name AddCBV' : Nat -> (Nat -> _|_) -> Nat -> _|_
rule AddCBV'.m.c.n' -> AddCBV.n'.(Succ.m).c
name AddCBN : Nat -> Nat -> Nat
rule AddCBN.n.m.c1.c2 -> n.(m.c1.c2).(AddCBN'.m.c2)
name AddCBN' : Nat -> (Nat -> _|_) -> Nat -> _|_
rule AddCBN'.m.c2.n' -> c2.(AddCBN.n'.m)
name StoreNat : Nat -> (Nat -> _|_) -> _|_
rule StoreNat.n.r -> n.(r.Zero).(StoreNatA.r)
name StoreNatA : (Nat -> _|_) -> Nat -> _|_
rule StoreNatA.r.m -> StoreNat.m.(StoreNatB.r)
name StoreNatB : (Nat -> _|_) -> Nat -> _|_
rule StoreNatB.r.m' -> r.(Succ.m')
name UnstoreNat : ((Nat -> _|_) -> _|_) -> Nat
rule UnstoreNat.f.z.s -> f.(UseNat.z.s)
name UseNat : _|_ -> (Nat -> _|_) -> Nat -> _|_
rule UseNat.z.s.n -> n.z.s
name LengthCBN : List -> Nat
rule LengthCBN.x.c1.c2 -> ItCBN_List_Nat.LengthCBN_1.LengthCBN_2.x.c1.c2
name LengthCBN_1 : Nat
rule LengthCBN_1.c1.c2 -> Zero.c1.c2
name LengthCBN_2 : Nat -> Nat -> Nat
rule LengthCBN_2.x.n.c1.c2 -> Succ.n.c1.c2
name LengthCBV : List -> (Nat -> _|_) -> _|_
rule LengthCBV.x.c -> ItCBV_List_Nat.LengthCBV_1.LengthCBV_2.c.x
name LengthCBV_1 : (Nat -> _|_) -> _|_
rule LengthCBV_1.c -> c.Zero
name LengthCBV_2 : Nat -> Nat -> (Nat -> _|_) -> _|_
rule LengthCBV_2.x.n.c -> c.(Succ.n)
