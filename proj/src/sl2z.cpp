#include "trigroup/sl2z.hpp"

#include <stdexcept>

namespace trigroup {

TurnWord::TurnWord(std::string_view letters) : letters_(letters) {
  for (char ch : letters_) {
    if (ch != 'L' && ch != 'R') throw std::invalid_argument(std::string("not a turn letter: '") + ch + "'");
  }
}

void Mat2Z::mul_right(Letter x) {
  if (x == Letter::L) {
    // [[a, a+b], [c, c+d]]
    b_ += a_;
    d_ += c_;
  } else {
    // [[a+b, b], [c+d, d]]
    a_ += b_;
    c_ += d_;
  }
}

void Mat2Z::mul_left(Letter x) {
  if (x == Letter::L) {
    a_ += c_;
    b_ += d_;
  } else {
    c_ += a_;
    d_ += b_;
  }
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::string Mat2Z::to_string() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

Mat2Z mat_of_letter(Letter x) {
  if (x == Letter::L) return {1, 1, 0, 1};
  return {1, 0, 1, 1};
}

Mat2Z edge_flip() { return {0, 1, -1, 0}; }

Mat2Z multiply(const Mat2Z& x, const Mat2Z& y) { return x * y; }

bool psl_equal(const Mat2Z& x, const Mat2Z& y) { return x == y || x == -y; }

Mat2Z mat_of_word(const TurnWord& w) {
  Mat2Z m;
  for (std::size_t i = 0; i < w.size(); ++i) m.mul_right(w[i]);
  return m;
}

}  // namespace trigroup
