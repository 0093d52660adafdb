#include <stdexcept>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "trigroup/sl2z.hpp"

using namespace trigroup;

namespace {

TurnWord random_word(std::mt19937_64& rng, int length) {
  std::string s;
  for (int i = 0; i < length; ++i) s += (rng() & 1) ? 'L' : 'R';
  return TurnWord(s);
}

}  // namespace

TEST_SUITE_BEGIN("sl2z");

TEST_CASE("letter matrices") {
  CHECK(mat_of_letter(Letter::L) == Mat2Z(1, 1, 0, 1));
  CHECK(mat_of_letter(Letter::R) == Mat2Z(1, 0, 1, 1));
  CHECK(mat_of_letter(Letter::L).determinant() == 1);
  CHECK(mat_of_letter(Letter::R).determinant() == 1);
  CHECK(edge_flip().determinant() == 1);
  // The edge flip is an involution of the upper half-plane.
  CHECK(psl_equal(edge_flip() * edge_flip(), Mat2Z::identity()));
}

TEST_CASE("products, inverses, traces") {
  CHECK(multiply(mat_of_letter(Letter::L), mat_of_letter(Letter::R)) == Mat2Z(2, 1, 1, 1));
  CHECK(multiply(mat_of_letter(Letter::R), mat_of_letter(Letter::L)) == Mat2Z(1, 1, 1, 2));
  CHECK(inverse(Mat2Z(2, 1, 1, 1)) == Mat2Z(1, -1, -1, 2));
  CHECK(trace(Mat2Z(1, 1, 0, 1)) == 2);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Mat2Z m = mat_of_word(random_word(rng, 1 + static_cast<int>(rng() % 40)));
    CHECK(m * inverse(m) == Mat2Z::identity());
    CHECK(inverse(m) * m == Mat2Z::identity());
  }
}

TEST_CASE("mat_of_word") {
  CHECK(mat_of_word(TurnWord("")) == Mat2Z::identity());
  CHECK(mat_of_word(TurnWord("LR")) == multiply(mat_of_letter(Letter::L), mat_of_letter(Letter::R)));
  CHECK(mat_of_word(TurnWord("RRR")) == Mat2Z(1, 0, 3, 1));
  CHECK(mat_of_word(TurnWord("LLL")) == Mat2Z(1, 3, 0, 1));
  CHECK_THROWS_AS(TurnWord("LXR"), std::invalid_argument);

  SUBCASE("streaming accumulator matches the batch product") {
    std::uint64_t count = 0;
    WordAccumulator acc(&count);
    for (char ch : std::string("LRRLRLLR")) acc.push(static_cast<Letter>(ch));
    CHECK(acc.word().str() == "LRRLRLLR");
    CHECK(acc.matrix() == mat_of_word(TurnWord("LRRLRLLR")));
    CHECK(count == 8);
  }
}

TEST_CASE("psl_equal") {
  const Mat2Z m(2, 1, 1, 1);
  CHECK(psl_equal(m, -m));
  CHECK_FALSE(psl_equal(mat_of_letter(Letter::L), mat_of_letter(Letter::R)));
  CHECK_FALSE(psl_equal(mat_of_word(TurnWord("RRR")), Mat2Z::identity()));
  CHECK(psl_equal(Mat2Z(-1, 0, 0, -1), Mat2Z::identity()));
}

TEST_CASE("determinant and homomorphism properties") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const TurnWord u = random_word(rng, static_cast<int>(rng() % 30));
    const TurnWord v = random_word(rng, static_cast<int>(rng() % 30));
    TurnWord uv = u;
    uv.append(v);
    CHECK(mat_of_word(uv) == mat_of_word(u) * mat_of_word(v));
    CHECK(mat_of_word(uv).determinant() == 1);
    Mat2Z left;
    for (std::size_t k = uv.size(); k-- > 0;) left.mul_left(uv[k]);
    CHECK(left == mat_of_word(uv));
  }
}

TEST_CASE("alternating words grow like Fibonacci numbers") {
  BigInt f0 = 1, f1 = 1;  // F(1), F(2)
  Mat2Z m;
  for (int k = 1; k <= 300; ++k) {
    m.mul_right(k % 2 ? Letter::L : Letter::R);
    const BigInt biggest = std::max({BigInt(abs(m.a())), BigInt(abs(m.b())), BigInt(abs(m.c())), BigInt(abs(m.d()))});
    // After k letters the largest entry is F(k+1).
    CHECK(biggest == f1);
    const BigInt f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  CHECK(msb(BigInt(abs(m.a()))) > 64);
}

TEST_CASE("length-200 words agree with a decimal-string oracle") {
  using testing::DecimalInt;
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    const TurnWord w = random_word(rng, 200);
    DecimalInt a = 1, b = 0, c = 0, d = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      // Right-multiply by [[1,1],[0,1]] or [[1,0],[1,1]] using generic products.
      const long long x[4] = {1, w[i] == Letter::L ? 1 : 0, w[i] == Letter::L ? 0 : 1, 1};
      const DecimalInt na = a * x[0] + b * x[2];
      const DecimalInt nb = a * x[1] + b * x[3];
      const DecimalInt nc = c * x[0] + d * x[2];
      const DecimalInt nd = c * x[1] + d * x[3];
      a = na, b = nb, c = nc, d = nd;
    }
    const Mat2Z m = mat_of_word(w);
    CHECK(m.a().str() == a.str());
    CHECK(m.b().str() == b.str());
    CHECK(m.c().str() == c.str());
    CHECK(m.d().str() == d.str());
    CHECK((a * d + (DecimalInt(-1) * b * c)).str() == "1");
  }
}

TEST_SUITE_END();
