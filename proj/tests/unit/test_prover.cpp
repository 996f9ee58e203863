#include <doctest.h>

#include "helpers.hpp"
#include "morgan/algebra.hpp"
#include "morgan/corpus.hpp"
#include "morgan/derivation.hpp"
#include "morgan/prover.hpp"

using namespace morgan;
using testing::C;
using testing::D;
using testing::I;
using testing::S;

TEST_CASE("decisions") {
  CHECK(derivable(Calculus::sdm, S("~~~p => ~p")));
  CHECK_FALSE(derivable(Calculus::sdm, S("p => ~~p")));
  CHECK_FALSE(derivable(Calculus::sdm, S("~~p => p")));
  CHECK(derivable(Calculus::dm, D("~(~p & ~q) => p | q")));
  CHECK(derivable(Calculus::dm, D("~~p => p")));
  CHECK_FALSE(derivable(Calculus::dm, D("p => ~p")));
  CHECK_FALSE(derivable(Calculus::intuitionistic, I("p -> q -> p => p")));
  CHECK(derivable(Calculus::classical, C("p -> q -> p => p")));
  CHECK(derivable(Calculus::intuitionistic, I("=> ~~(p | ~p)")));
  CHECK_THROWS_AS(derivable(Calculus::dm, S("p => p")), std::invalid_argument);
}

TEST_CASE("G3SDM gaps that the search reports as underivable") {
  // valid in every semi-De Morgan algebra up to size 6, yet no G3SDM derivation
  for (const char* text : {"=> ~(F & p)", "*r => ~(~~r & q)", "*p, *q => *((p | q) & r)"}) {
    Sequent s = S(text);
    CHECK_FALSE(derivable(Calculus::sdm, s));
    CHECK_FALSE(testing::naive_derivable(s));
    CHECK_FALSE(refute(s, Variety::sdm, 6).has_value());
  }
  CHECK(derivable(Calculus::sdm, S("*~~r => ~(~~r & q)")));
}

TEST_CASE("height-bounded queries") {
  CHECK(derivable_within_height(Calculus::sdm, S("p, q => p"), 0));
  CHECK_FALSE(derivable_within_height(Calculus::sdm, S("~p => ~p"), 2));
  CHECK(derivable_within_height(Calculus::sdm, S("~p => ~p"), 3));
  CHECK(min_height(Calculus::sdm, S("~p => ~p")) == 3u);
  CHECK(derivable_within_height(Calculus::dm, D("~~p => p"), 1));
  CHECK_FALSE(min_height(Calculus::sdm, S("p => ~~p")).has_value());
  Prover pr(Calculus::sdm);
  auto d = pr.derive_min_height(S("~p => ~p"));
  REQUIRE(d);
  CHECK((*d)->height == 3);
}

TEST_CASE("committed verdict agrees with plain exhaustive search") {
  for (Calculus c : {Calculus::sdm, Calculus::dm}) {
    CorpusOptions opts;
    opts.calculus = c;
    opts.max_weight = c == Calculus::sdm ? 26 : 22;
    CorpusGenerator gen(41, opts);
    Prover prover(c);
    std::size_t yes = 0;
    for (int i = 0; i < 3000; ++i) {
      Sequent s = gen.sequent();
      bool fast = prover.derivable(s);
      CHECK_MESSAGE(fast == testing::naive_derivable(s), print_sequent(s));
      yes += fast;
    }
    CHECK(yes > 100);  // the sample is not degenerate
  }
}

TEST_CASE("derive and derivable agree; derivations replay") {
  for (Calculus c : {Calculus::sdm, Calculus::dm}) {
    CorpusOptions opts;
    opts.calculus = c;
    opts.max_weight = 22;
    CorpusGenerator gen(42, opts);
    Prover prover(c);
    for (int i = 0; i < 600; ++i) {
      Sequent s = gen.sequent();
      auto d = prover.derive(s);
      CHECK(d.has_value() == prover.derivable(s));
      if (d) {
        CHECK(check_derivation(c, *d).ok);
        CHECK(prover.derivable_within_height(s, (*d)->height));
      }
    }
  }
}

TEST_CASE("INT/CL derivations replay; CL extends INT") {
  for (const char* text : {"p -> q, q -> r => p -> r", "p & q => q & p", "=> ~~(p | ~p)",
                           "(p -> F) -> F => p", "p -> q -> p => p", "=> p | ~p", "p | q, ~p => q"}) {
    auto ci = derive(Calculus::intuitionistic, I(text));
    auto cc = derive(Calculus::classical, C(text));
    if (ci) {
      CHECK(check_derivation(Calculus::intuitionistic, *ci).ok);
      CHECK(cc.has_value());
    }
    if (cc) CHECK(check_derivation(Calculus::classical, *cc).ok);
  }
  CHECK_FALSE(derivable(Calculus::intuitionistic, I("(p -> F) -> F => p")));
  CHECK(derivable(Calculus::classical, C("(p -> F) -> F => p")));
}

TEST_CASE("memo cap clears and keeps answers") {
  Prover small(Calculus::sdm, 8);
  Prover big(Calculus::sdm);
  CorpusOptions opts;
  opts.max_weight = 22;
  CorpusGenerator gen(43, opts);
  for (int i = 0; i < 200; ++i) {
    Sequent s = gen.sequent();
    CHECK(small.derivable(s) == big.derivable(s));
  }
  CHECK(small.stats().memo_clears > 0);
}
