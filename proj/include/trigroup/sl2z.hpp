#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigroup {

using BigInt = boost::multiprecision::cpp_int;

enum class Letter : char { L = 'L', R = 'R' };

// Word over {L, R}, listed in path order.
class TurnWord {
 public:
  TurnWord() = default;
  // Throws std::invalid_argument on characters other than 'L' and 'R'.
  explicit TurnWord(std::string_view letters);

  void push_back(Letter x) { letters_.push_back(static_cast<char>(x)); }
  void append(const TurnWord& w) { letters_ += w.letters_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  const std::string& str() const noexcept { return letters_; }

  friend bool operator==(const TurnWord&, const TurnWord&) = default;

 private:
  std::string letters_;
};

// Row-major [[a, b], [c, d]]. Every matrix built through the public
// operations has determinant 1; the raw constructor exists for parsing and
// fault injection and does not check.
class Mat2Z {
 public:
  Mat2Z() : a_(1), b_(0), c_(0), d_(1) {}
  Mat2Z(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Mat2Z identity() { return {}; }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  BigInt determinant() const { return a_ * d_ - b_ * c_; }
  BigInt trace() const { return a_ + d_; }
  Mat2Z inverse() const { return {d_, -b_, -c_, a_}; }
  Mat2Z operator-() const { return {-a_, -b_, -c_, -d_}; }

  // In-place products with a single letter; additions only.
  void mul_right(Letter x);
  void mul_left(Letter x);

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;

  std::string to_string() const;

 private:
  BigInt a_, b_, c_, d_;
};

// L(z) = z + 1 and R(z) = z / (z + 1): the two parabolic turns of the Farey
// tessellation.
Mat2Z mat_of_letter(Letter x);

// z -> -1/z, the half-turn exchanging the two sides of an edge.
Mat2Z edge_flip();

Mat2Z multiply(const Mat2Z& x, const Mat2Z& y);
inline Mat2Z inverse(const Mat2Z& m) { return m.inverse(); }
inline BigInt trace(const Mat2Z& m) { return m.trace(); }

// Equality in PSL(2,Z): A == B or A == -B.
bool psl_equal(const Mat2Z& x, const Mat2Z& y);

// Counts one multiplication per accepted letter.
class WordAccumulator {
 public:
  explicit WordAccumulator(std::uint64_t* multiplications = nullptr) : counter_(multiplications) {}

  void push(Letter x) {
    word_.push_back(x);
    matrix_.mul_right(x);
    if (counter_) ++*counter_;
  }

  const TurnWord& word() const noexcept { return word_; }
  const Mat2Z& matrix() const noexcept { return matrix_; }
  TurnWord take_word() { return std::move(word_); }
  Mat2Z take_matrix() { return std::move(matrix_); }

 private:
  std::uint64_t* counter_;
  TurnWord word_;
  Mat2Z matrix_;
};

// Left-to-right product of the letters; identity for the empty word.
Mat2Z mat_of_word(const TurnWord& w);

}  // namespace trigroup
