#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sturmian/error.hpp"
#include "sturmian/iet.hpp"
#include "sturmian/morphism.hpp"

using namespace sturmian;

namespace {

MorphismWord name(const char* s) { return MorphismWord::parse(s); }

IncidenceMatrix counts(const SturmianMorphism& m) {
  IncidenceMatrix out{};
  for (int j = 0; j < 2; ++j) {
    const std::string& img = m.image(j == 0 ? '0' : '1');
    for (char c : img) out[c - '0'][j] += 1;
  }
  return out;
}

}  // namespace

TEST_CASE("parse accepts ascii and utf-8") {
  CHECK(name("abB").to_string() == "abB");
  CHECK(name("ab\xce\xb2") == name("abB"));
  CHECK(name("\xce\xb1\xce\xb2") == name("AB"));
  CHECK(name("").empty());
  CHECK_THROWS_AS(name("abc"), Error);
}

TEST_CASE("apply examples") {
  CHECK(apply_morphism(realize(name("a")), "1") == "10");
  CHECK(apply_morphism(SturmianMorphism::identity(), "0110") == "0110");
  CHECK(apply_morphism(realize(name("abB")), "0") == oracle::substitute("abB", "0"));
  CHECK(apply_morphism(realize(name("aBb")), "0") == "100");
  CHECK_THROWS_AS(apply_morphism(realize(name("a")), "012"), Error);
}

TEST_CASE("realize examples") {
  // phi_{abB}: b then beta then a act as phi_a(phi_b(phi_beta(x))) on the left.
  CHECK(realize(name("abB")) == SturmianMorphism{"0100", "010"});
  // The images 100 / 10010 belong to the cyclic shift aBb.
  CHECK(realize(name("aBb")) == SturmianMorphism{"100", "10010"});
  for (std::size_t k = 0; k <= 6; ++k) {
    const SturmianMorphism m = realize(name("b").repeated(k));
    CHECK(m.image0 == "0");
    CHECK(m.image1 == std::string(k, '0') + "1");
  }
  CHECK(realize(MorphismWord{}) == SturmianMorphism::identity());
  for (Gen g : kAllGenerators) {
    const char c = to_ascii(g);
    const std::string s(1, c);
    CHECK(realize(name(s.c_str())) == SturmianMorphism{oracle::image_of(c, '0'), oracle::image_of(c, '1')});
  }
}

TEST_CASE("incidence matrix examples") {
  CHECK(incidence_matrix(MorphismWord{}) == IncidenceMatrix{{{1, 0}, {0, 1}}});
  CHECK(incidence_matrix(name("a")) == IncidenceMatrix{{{1, 1}, {0, 1}}});
  CHECK(incidence_matrix(name("abB")) == IncidenceMatrix{{{3, 2}, {1, 1}}});
  CHECK(incidence_matrix(name("aBb")) == IncidenceMatrix{{{2, 3}, {1, 2}}});
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(name("abB")));
  CHECK_FALSE(is_primitive(name("bb")));
  CHECK_FALSE(is_primitive(MorphismWord{}));
  CHECK(is_primitive(name("aA")));
  CHECK_FALSE(is_primitive(name("AB")));
}

TEST_CASE("conjugation by E") {
  CHECK(conjugate_by_E(name("aB")) == name("Ab"));
  CHECK(conjugate_by_E(MorphismWord{}) == MorphismWord{});
  CHECK(conjugate_by_E(name("abB")) == name("ABb"));
  CHECK(conjugate_by_E(conjugate_by_E(name("abB"))) == name("abB"));
  // E o phi_w o E realized directly.
  auto swap = [](std::string s) {
    for (char& c : s) c = c == '0' ? '1' : '0';
    return s;
  };
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::string w = oracle::random_name(rng, 1 + i % 7);
    const SturmianMorphism m = realize(conjugate_by_E(name(w.c_str())));
    CHECK(m.image0 == swap(oracle::substitute(w, "1")));
    CHECK(m.image1 == swap(oracle::substitute(w, "0")));
  }
}

TEST_CASE("cyclic shift") {
  CHECK(cyc(name("abB"), 1) == name("bBa"));
  CHECK(cyc(MorphismWord{}, 5) == MorphismWord{});
  CHECK(cyc(name("bB"), 2) == name("bB"));
  CHECK(cyc(name("abB"), 4) == name("bBa"));
}

TEST_CASE("homomorphism property") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::string u = oracle::random_name(rng, i % 5);
    const std::string v = oracle::random_name(rng, (i / 5) % 5);
    const std::string x = oracle::random_binary(rng, i % 9);
    const SturmianMorphism uv = realize(name((u + v).c_str()));
    CHECK(apply_morphism(uv, x) == apply_morphism(realize(name(u.c_str())), apply_morphism(realize(name(v.c_str())), x)));
    CHECK(apply_morphism(uv, x) == oracle::substitute(u + v, x));
  }
}

TEST_CASE("determinant and incidence consistency") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const MorphismWord w = name(oracle::random_name(rng, i % 11).c_str());
    const IncidenceMatrix m = incidence_matrix(w);
    CHECK(abs(determinant(m)) == 1);
    CHECK(m == counts(realize(w)));
    CHECK(m == incidence_matrix(realize(w)));
  }
  CHECK(multiply(incidence_matrix(name("ab")), incidence_matrix(name("B"))) == incidence_matrix(name("abB")));
}

TEST_CASE("phi_a^k(1 w) = 1 phi_b^k(w) on Sturmian prefixes") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    QuadNumber l0, l1, rho;
    oracle::random_params(rng, 5, l0, l1, rho);
    const std::string p = generate(IetParams{l0, l1, rho, Boundary::lower}, 60);
    for (std::size_t k = 0; k <= 6; ++k) {
      const SturmianMorphism ak = realize(name("a").repeated(k));
      const SturmianMorphism bk = realize(name("b").repeated(k));
      const std::string rhs = "1" + apply_morphism(bk, p);
      const std::string lhs = apply_morphism(ak, "1" + p);
      const std::size_t n = apply_morphism(bk, p).size();
      CHECK(lhs.substr(0, n) == rhs.substr(0, n));
    }
  }
}
