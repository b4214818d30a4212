// Copyright 2026 The dimerlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimerlab/scalar.hpp"

#include <cctype>
#include <ostream>

#include "dimerlab/error.hpp"

namespace dimerlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_decimal(const Rational& q) {
  mpf_class f(q, 256);
  char buffer[128];
  gmp_snprintf(buffer, sizeof(buffer), "%.15Fg", f.get_mpf_t());
  return buffer;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_real() && other.is_real()) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw Error(ErrorCode::kPrecondition, "division by zero");
  if (other.is_real()) {
    re_ /= other.re_;
    im_ /= other.re_;
    return *this;
  }
  Rational n = other.norm();
  *this *= other.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string im = rational_to_string(im_);
  if (im.front() != '-') im = "+" + im;
  return rational_to_string(re_) + im + "i";
}

std::string Scalar::to_decimal() const {
  if (is_real()) return rational_to_decimal(re_);
  std::string im = rational_to_decimal(im_);
  if (im.front() != '-') im = "+" + im;
  return rational_to_decimal(re_) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty() || t.back() != 'i') return Scalar(parse_rational(t));
  t.remove_suffix(1);
  // The imaginary part starts at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if (t[i] == '+' || t[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "malformed complex '" + std::string(text) + "'");
  }
  return Scalar(parse_rational(t.substr(0, split)), parse_rational(t.substr(split)));
}

}  // namespace dimerlab
