#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cc/datatype.hpp"
#include "cc/prelude.hpp"
#include "cc/printer.hpp"
#include "helpers.hpp"

using namespace cc;
using ccwb_test::term;
using ccwb_test::type;

namespace {

DataTypeDecl nat_decl() {
  return DataTypeDecl{"Nat", {}, {CtorDecl{Name("Zero"), {}},
                                  CtorDecl{Name("Succ"), {ArgType::rec()}}}};
}

DataTypeDecl list_a_decl() {
  return DataTypeDecl{
      "List",
      {"A"},
      {CtorDecl{Name("Nil"), {}},
       CtorDecl{Name("Cons"), {ArgType::ext(Type::tyvar("A")), ArgType::rec()}}}};
}

DataTypeDecl tree_a_decl() {
  return DataTypeDecl{
      "Tree",
      {"A"},
      {CtorDecl{Name("Leaf"), {}},
       CtorDecl{Name("Join"),
                {ArgType::ext(Type::tyvar("A")), ArgType::rec(), ArgType::rec()}}}};
}

DataTypeDecl unit_decl() {
  return DataTypeDecl{"Unit", {}, {CtorDecl{Name("U"), {}}}};
}

DataTypeDecl b_decl() {
  return DataTypeDecl{"B", {}, {CtorDecl{Name("MkB"), {}}}};
}

std::vector<std::string> rule_lines(const GeneratedBundle& b) {
  std::vector<std::string> out;
  for (const Rule& r : b.rules) out.push_back(print(r));
  return out;
}

}  // namespace

TEST_CASE("compile_type builds the expected mu-types") {
  CHECK(print(compile_type(nat_decl())) == "mu T . _|_ -> (T -> _|_) -> _|_");
  CHECK(print(compile_type(list_a_decl())) ==
        "mu T . _|_ -> (A -> T -> _|_) -> _|_");
  CHECK(print(compile_type(tree_a_decl())) ==
        "mu T . _|_ -> (A -> T -> T -> _|_) -> _|_");
  CHECK(type_eq(compile_type(DataTypeDecl{
            "Bool", {}, {CtorDecl{Name("True"), {}}, CtorDecl{Name("False"), {}}}}),
        type("_|_ -> _|_ -> _|_")));
  for (const DataTypeDecl& d :
       {nat_decl(), list_a_decl(), tree_a_decl(), unit_decl()})
    CHECK_FALSE(validate_mu_shape(compile_type(d)).has_value());
}

TEST_CASE("a non-recursive argument may not smuggle in the declared name") {
  DataTypeDecl bad{"Bad",
                   {},
                   {CtorDecl{Name("Mk"),
                             {ArgType::ext(Type::arrow(Type::tyvar("Bad"),
                                                       Type::bot()))}}}};
  CHECK(validate_decl(bad).has_value());
  CHECK_THROWS_AS(compile_type(bad), Error);
}

TEST_CASE("gen_constructors emits the destructor rules") {
  GeneratedBundle list = gen_constructors(instantiate(
      list_a_decl(), {compile_type(nat_decl())}, "Nat"));
  // instantiated names carry the label
  CHECK(print(list.rules[0]) == "rule Nil_Nat.c1.c2 -> c1");
  CHECK(print(list.rules[1]) == "rule Cons_Nat.x1.x2.c1.c2 -> c2.x1.x2");

  GeneratedBundle nat = gen_constructors(nat_decl());
  CHECK(print(nat.rules[0]) == "rule Zero.c1.c2 -> c1");
  CHECK(print(nat.rules[1]) == "rule Succ.x1.c1.c2 -> c2.x1");

  GeneratedBundle unit = gen_constructors(unit_decl());
  REQUIRE(unit.rules.size() == 1);
  CHECK(print(unit.rules[0]) == "rule U.c1 -> c1");

  // Ci : Di -> D, curried
  Type nat_ty = compile_type(nat_decl());
  CHECK(type_eq(nat.sig_entries[0].second, nat_ty));
  CHECK(type_eq(nat.sig_entries[1].second, Type::arrow(nat_ty, nat_ty)));
  for (const auto& [n, o] : nat.provenance) CHECK(o == Origin::Constructor);
}

TEST_CASE("generated constructor rule parameter naming") {
  // payload variables are numbered
  GeneratedBundle nat = gen_constructors(nat_decl());
  CHECK(nat.rules[1].params.size() == 3);
  CHECK(nat.rules[1].params[0].text == "x1");
}

TEST_CASE("destructor soundness: one step to the matching continuation") {
  Prelude pre = build_prelude();
  for (const DataTypeDecl& d : pre.decls) {
    for (std::size_t i = 0; i < d.ctors.size(); ++i) {
      const CtorDecl& c = d.ctors[i];
      Term t = Term::name(c.name);
      std::vector<Term> payload;
      for (std::size_t j = 0; j < c.args.size(); ++j) {
        payload.push_back(Term::name("P" + std::to_string(j)));
        t = Term::app(t, payload.back());
      }
      std::vector<Name> conts = mint_fresh("C", d.ctors.size(), {});
      for (const Name& k : conts) t = Term::app(t, Term::name(k));
      EvalOutcome out = evaluate(pre.program, t, 10);
      REQUIRE(out.terminated());
      CHECK(out.steps == 1);
      CHECK(out.last == fold_spine(Term::name(conts[i]), payload));
    }
  }
}

TEST_CASE("encode builds numerals and lists") {
  Prelude pre = build_prelude();
  const DataTypeDecl& nat = *pre.find_decl("Nat");
  const DataTypeDecl& list = *pre.find_decl("List");

  CHECK(encode(nat, nat_value(0)) == term("Zero"));
  CHECK(encode(nat, nat_value(2)) == term("Succ.(Succ.Zero)"));

  Value one_item{"Cons", {}};
  one_item.args.emplace_back(term("Succ.Zero"));
  Value nil{"Nil", {}};
  one_item.args.emplace_back(nil);
  CHECK(encode(list, one_item) == term("Cons.(Succ.Zero).Nil"));

  Value wrong{"Succc", {}};
  CHECK_THROWS_AS(encode(nat, wrong), ConstructorMismatchError);
}

TEST_CASE("decode observes values through fresh continuations") {
  Prelude pre = build_prelude();
  const DataTypeDecl& nat = *pre.find_decl("Nat");

  auto two = decode(nat, pre.program, term("Succ.(Succ.Zero)"), 1000);
  REQUIRE(two.ok());
  CHECK(two.value() == nat_value(2));

  // a stored numeral: run StoreNat.3.C, strip C, decode the payload
  EvalOutcome stored =
      evaluate(pre.program, term("StoreNat.(Succ.(Succ.(Succ.Zero))).C"), 1000);
  REQUIRE(stored.terminated());
  Spine s = spine(stored.last);
  REQUIRE(s.head == Term::name("C"));
  REQUIRE(s.args.size() == 1);
  auto three = decode(nat, pre.program, s.args[0], 1000);
  REQUIRE(three.ok());
  CHECK(three.value() == nat_value(3));

  // lazy values decode through evaluation
  auto lazy = decode(nat, pre.program, term("AddCBN.(Succ.Zero).(Succ.Zero)"),
                     1000);
  REQUIRE(lazy.ok());
  CHECK(lazy.value() == nat_value(2));

  Program p = pre.program;
  p.add(Rule(Name("Omega"), {Var("x")},
             Term::app(Term::var("x"), Term::var("x"))));
  auto diverged = decode(nat, p, term("Omega.Omega"), 200);
  REQUIRE_FALSE(diverged.ok());
  CHECK(diverged.error().kind == DecodeFailureKind::FuelExhausted);

  auto stuck = decode(nat, pre.program, term("Mystery"), 200);
  REQUIRE_FALSE(stuck.ok());
  CHECK(stuck.error().kind == DecodeFailureKind::NotAValue);
}

TEST_CASE("encode/decode round trip on random value trees") {
  Prelude pre = build_prelude();
  const DataTypeDecl& nat = *pre.find_decl("Nat");
  const DataTypeDecl& list = *pre.find_decl("List");
  const DataTypeDecl& tree = *pre.find_decl("Tree");
  std::mt19937_64 rng(43);

  for (int i = 0; i < 30; ++i) {
    auto nv = nat_value(rng() % 7);
    auto back = decode(nat, pre.program, encode(nat, nv), 2000);
    REQUIRE(back.ok());
    CHECK(back.value() == nv);
  }

  auto rand_list = [&rng](std::size_t max_len) {
    Value v{"Nil", {}};
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      Value cons{"Cons", {}};
      cons.args.emplace_back(encode_nat(rng() % 4));
      cons.args.emplace_back(std::move(v));
      v = std::move(cons);
    }
    return v;
  };
  for (int i = 0; i < 20; ++i) {
    Value lv = rand_list(6);
    auto back = decode(list, pre.program, encode(list, lv), 4000);
    REQUIRE(back.ok());
    CHECK(back.value() == lv);
  }

  // depth-bounded random trees
  struct Gen {
    std::mt19937_64& rng;
    Value tree_value(int depth) {
      if (depth == 0 || rng() % 3 == 0) return Value{"Leaf", {}};
      Value v{"Join", {}};
      v.args.emplace_back(encode_nat(rng() % 4));
      v.args.emplace_back(tree_value(depth - 1));
      v.args.emplace_back(tree_value(depth - 1));
      return v;
    }
  } gen{rng};
  for (int i = 0; i < 20; ++i) {
    Value tv = gen.tree_value(6);
    auto back = decode(tree, pre.program, encode(tree, tv), 8000);
    REQUIRE(back.ok());
    CHECK(back.value() == tv);
  }
}

TEST_CASE("call-by-name iterator rules, golden") {
  GeneratedBundle nat = gen_iter_cbn(nat_decl(), nat_decl());
  CHECK(rule_lines(nat) ==
        std::vector<std::string>{
            "rule ItCBN_Nat_Nat.f1.f2.x.c1.c2 -> "
            "x.(ItCBN_Nat_Nat_Zero.f1.f2.c1.c2).(ItCBN_Nat_Nat_Succ.f1.f2.c1.c2)",
            "rule ItCBN_Nat_Nat_Zero.f1.f2.c1.c2 -> f1.c1.c2",
            "rule ItCBN_Nat_Nat_Succ.f1.f2.c1.c2.x1 -> "
            "f2.(ItCBN_Nat_Nat.f1.f2.x1).c1.c2"});

  GeneratedBundle list = gen_iter_cbn(list_a_decl(), nat_decl());
  CHECK(rule_lines(list) ==
        std::vector<std::string>{
            "rule ItCBN_List_Nat.f1.f2.x.c1.c2 -> "
            "x.(ItCBN_List_Nat_Nil.f1.f2.c1.c2).(ItCBN_List_Nat_Cons.f1.f2.c1.c2)",
            "rule ItCBN_List_Nat_Nil.f1.f2.c1.c2 -> f1.c1.c2",
            "rule ItCBN_List_Nat_Cons.f1.f2.c1.c2.x1.x2 -> "
            "f2.x1.(ItCBN_List_Nat.f1.f2.x2).c1.c2"});

  GeneratedBundle unit = gen_iter_cbn(unit_decl(), unit_decl());
  REQUIRE(unit.rules.size() == 2);
  CHECK(print(unit.rules[1]) == "rule ItCBN_Unit_Unit_U.f1.c1 -> f1.c1");
}

TEST_CASE("call-by-value iterator rules, golden") {
  GeneratedBundle nat = gen_iter_cbv(nat_decl(), nat_decl());
  CHECK(rule_lines(nat) ==
        std::vector<std::string>{
            "rule ItCBV_Nat_Nat.f1.f2.c.x -> "
            "x.(ItCBV_Nat_Nat_Zero_1.f1.f2.c).(ItCBV_Nat_Nat_Succ_1.f1.f2.c)",
            "rule ItCBV_Nat_Nat_Zero_1.f1.f2.c -> f1.c",
            "rule ItCBV_Nat_Nat_Succ_1.f1.f2.c.x1 -> "
            "ItCBV_Nat_Nat.f1.f2.(ItCBV_Nat_Nat_Succ_2.f1.f2.c).x1",
            "rule ItCBV_Nat_Nat_Succ_2.f1.f2.c.r1 -> f2.r1.c"});

  GeneratedBundle list = gen_iter_cbv(list_a_decl(), b_decl());
  CHECK(rule_lines(list) ==
        std::vector<std::string>{
            "rule ItCBV_List_B.f1.f2.c.x -> "
            "x.(ItCBV_List_B_Nil_1.f1.f2.c).(ItCBV_List_B_Cons_1.f1.f2.c)",
            "rule ItCBV_List_B_Nil_1.f1.f2.c -> f1.c",
            "rule ItCBV_List_B_Cons_1.f1.f2.c.x1.x2 -> "
            "ItCBV_List_B_Cons_2.f1.f2.c.x2.x1",
            "rule ItCBV_List_B_Cons_2.f1.f2.c.x2.r1 -> "
            "ItCBV_List_B.f1.f2.(ItCBV_List_B_Cons_3.f1.f2.c.r1).x2",
            "rule ItCBV_List_B_Cons_3.f1.f2.c.r1.r2 -> f2.r1.r2.c"});

  GeneratedBundle unit = gen_iter_cbv(unit_decl(), b_decl());
  REQUIRE(unit.rules.size() == 2);
  CHECK(print(unit.rules[0]) ==
        "rule ItCBV_Unit_B.f1.c.x -> x.(ItCBV_Unit_B_U_1.f1.c)");
  CHECK(print(unit.rules[1]) == "rule ItCBV_Unit_B_U_1.f1.c -> f1.c");
}

TEST_CASE("iterator bundles are well-typed when merged over their types") {
  DataTypeDecl nat = nat_decl();
  DataTypeDecl tree = tree_a_decl();
  // tree payload atoms stay opaque
  Signature sig;
  Program prog;
  merge_bundle(sig, prog, gen_constructors(nat));
  merge_bundle(sig, prog, gen_constructors(tree));
  merge_bundle(sig, prog, gen_iter_cbn(tree, nat));
  merge_bundle(sig, prog, gen_iter_cbv(tree, nat));
  CHECK(check_program(sig, prog).empty());
}

TEST_CASE("CBV iterator computes iteration semantics") {
  Prelude pre = build_prelude();

  // base delivering 0, F = successor (prelude F2 has the hat-of-Succ rule)
  Program p0 = pre.program;
  auto [base0, base0_rule] = lambda_lift({Var("c")}, term("c.Zero"), p0);
  p0.add(base0_rule);
  for (std::size_t n = 0; n <= 20; ++n) {
    Term t = fold_spine(Term::name("ItCBV_Nat_Nat"),
                        {Term::name(base0), Term::name("F2"), Term::name("C"),
                         encode_nat(n)});
    EvalOutcome out = evaluate(p0, t, 10000);
    REQUIRE(out.terminated());
    CHECK(out.last == Term::app(Term::name("C"), encode_nat(n)));
  }

  // base delivering 1, F = double successor via a lambda-lifted name
  Program p1 = pre.program;
  auto [base1, base1_rule] =
      lambda_lift({Var("c")}, term("c.(Succ.Zero)"), p1);
  p1.add(base1_rule);
  auto [dbl, dbl_rule] =
      lambda_lift({Var("x"), Var("c")}, term("c.(Succ.(Succ.x))"), p1);
  p1.add(dbl_rule);
  for (std::size_t n = 0; n <= 20; ++n) {
    Term t = fold_spine(Term::name("ItCBV_Nat_Nat"),
                        {Term::name(base1), Term::name(dbl), Term::name("C"),
                         encode_nat(n)});
    EvalOutcome out = evaluate(p1, t, 10000);
    REQUIRE(out.terminated());
    CHECK(out.last == Term::app(Term::name("C"), encode_nat(1 + 2 * n)));
  }
}

TEST_CASE("CBV iteration over a doubly recursive constructor") {
  // count leaves: Leaf |-> 1, Join(x, l, r) |-> l + r; both subtree
  // results must be fully evaluated before the join function fires
  Prelude pre = build_prelude();
  Program p = pre.program;
  GeneratedBundle it = gen_iter_cbv(*pre.find_decl("Tree"),
                                    *pre.find_decl("Nat"));
  for (const Rule& r : it.rules) p.add(r);
  p.add(Rule(Name("LeafCount1"), {Var("c")}, term("c.(Succ.Zero)")));
  p.add(Rule(Name("LeafCount2"), {Var("x"), Var("r1"), Var("r2"), Var("c")},
             term("AddCBV.r1.r2.c")));

  const DataTypeDecl& tree = *pre.find_decl("Tree");
  std::mt19937_64 rng(53);
  struct Gen {
    std::mt19937_64& rng;
    std::size_t leaves = 0;
    Value tree_value(int depth) {
      if (depth == 0 || rng() % 3 == 0) {
        ++leaves;
        return Value{"Leaf", {}};
      }
      Value v{"Join", {}};
      v.args.emplace_back(encode_nat(rng() % 3));
      v.args.emplace_back(tree_value(depth - 1));
      v.args.emplace_back(tree_value(depth - 1));
      return v;
    }
  };
  for (int i = 0; i < 15; ++i) {
    Gen gen{rng};
    Value tv = gen.tree_value(4);
    Term t = fold_spine(Term::name("ItCBV_Tree_Nat"),
                        {Term::name("LeafCount1"), Term::name("LeafCount2"),
                         Term::name("C"), encode(tree, tv)});
    EvalOutcome out = evaluate(p, t, 100000);
    REQUIRE(out.terminated());
    CHECK(out.last == Term::app(Term::name("C"), encode_nat(gen.leaves)));
  }
}

TEST_CASE("lambda_lift mints deterministic fresh names") {
  Program ambient;
  auto [n1, r1] = lambda_lift({Var("x")}, Term::var("x"), ambient);
  CHECK(n1.text == "Lam#0");
  CHECK(print(r1) == "rule Lam#0.x -> x");
  ambient.add(r1);
  auto [n2, r2] = lambda_lift({Var("x"), Var("c")},
                              Term::app(Term::var("c"), Term::var("x")),
                              ambient);
  CHECK(n2.text == "Lam#1");
  CHECK(print(r2) == "rule Lam#1.x.c -> c.x");
  // lifting the body of a staged iterator rule
  auto [n3, r3] = lambda_lift(
      {Var("f1"), Var("f2"), Var("c"), Var("r1")}, term("f2.r1.c"), ambient);
  CHECK(print(r3) == "rule Lam#1.f1.f2.c.r1 -> f2.r1.c");
  (void)n3;
}

TEST_CASE("optional peephole pass compresses nullary stages") {
  GeneratedBundle nat = gen_iter_cbv(nat_decl(), nat_decl());
  GeneratedBundle slim = inline_nullary_stages(nat);
  CHECK(rule_lines(slim) ==
        std::vector<std::string>{
            "rule ItCBV_Nat_Nat.f1.f2.c.x -> "
            "x.(f1.c).(ItCBV_Nat_Nat_Succ_1.f1.f2.c)",
            "rule ItCBV_Nat_Nat_Succ_1.f1.f2.c.x1 -> "
            "ItCBV_Nat_Nat.f1.f2.(ItCBV_Nat_Nat_Succ_2.f1.f2.c).x1",
            "rule ItCBV_Nat_Nat_Succ_2.f1.f2.c.r1 -> f2.r1.c"});
  // the uniform schema is what the generator itself emits
  CHECK(nat.rules.size() == 4);

  // the compressed bundle still type-checks and computes the same results
  Signature sig;
  Program prog;
  merge_bundle(sig, prog, gen_constructors(nat_decl()));
  merge_bundle(sig, prog, slim);
  CHECK(check_program(sig, prog).empty());
  auto [base, base_rule] = lambda_lift({Var("c")}, term("c.Zero"), prog);
  prog.add(base_rule);
  auto [succ, succ_rule] =
      lambda_lift({Var("x"), Var("c")}, term("c.(Succ.x)"), prog);
  prog.add(succ_rule);
  Term t = fold_spine(Term::name("ItCBV_Nat_Nat"),
                      {Term::name(base), Term::name(succ), Term::name("C"),
                       encode_nat(3)});
  EvalOutcome out = evaluate(prog, t, 1000);
  REQUIRE(out.terminated());
  CHECK(out.last == Term::app(Term::name("C"), encode_nat(3)));
}

TEST_CASE("instantiate monomorphizes with suffixed names") {
  Type bool_ty = compile_type(
      DataTypeDecl{"Bool", {}, {CtorDecl{Name("True"), {}},
                                CtorDecl{Name("False"), {}}}});
  DataTypeDecl at_bool = instantiate(list_a_decl(), {bool_ty}, "Bool");
  CHECK(at_bool.name == "List_Bool");
  CHECK(at_bool.ctors[0].name.text == "Nil_Bool");
  CHECK(at_bool.ctors[1].name.text == "Cons_Bool");
  REQUIRE_FALSE(at_bool.ctors[1].args[0].is_rec());
  CHECK(type_eq(at_bool.ctors[1].args[0].ext_type(), bool_ty));
  CHECK_FALSE(validate_mu_shape(compile_type(at_bool)).has_value());
  CHECK_THROWS_AS(instantiate(list_a_decl(), {}, "X"), Error);
}

TEST_CASE("merge_bundle rejects name clashes") {
  Signature sig;
  Program prog;
  merge_bundle(sig, prog, gen_constructors(nat_decl()));
  CHECK_THROWS_AS(merge_bundle(sig, prog, gen_constructors(nat_decl())),
                  DuplicateDefinitionError);
}
