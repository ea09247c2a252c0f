// Copyright 2026 The pmdecomp Authors
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

#include "pmdecomp/rational.h"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pmdecomp {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num_text) || !IsDigits(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  BigInt num(std::string(num_text), 10);
  const BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (negative) num = -num;
  return Rat(num, den);
}

std::string Rat::ToString() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

Rat Abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt CommonDenominator(std::span<const Rat> values) {
  BigInt l = 1;
  for (const Rat& v : values) {
    const BigInt d = v.denominator();
    if (d != 1) l = Lcm(l, d);
  }
  return l;
}

BigInt Floor(const Rat& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(),
             r.raw().get_den_mpz_t());
  return out;
}

Rat SimplestBetween(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw std::invalid_argument("SimplestBetween: empty interval");
  const Rat fl(Floor(lo));
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  // Both endpoints lie strictly inside (fl, fl + 1): recurse on the
  // reciprocals of the fractional parts, which swaps their order.
  const Rat inner = SimplestBetween(Rat(1) / (hi - fl), Rat(1) / (lo - fl));
  return fl + Rat(1) / inner;
}

}  // namespace pmdecomp
