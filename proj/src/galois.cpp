// Copyright 2026 The tbtrellis Authors
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

#include "tbt/galois.hpp"

#include <algorithm>
#include <cmath>

namespace tbt {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw precondition_error("field mismatch");
}

// q^k with overflow saturation, for cap checks.
std::size_t pow_saturating(std::size_t q, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::size_t{1} << 62) / q) return std::size_t(-1);
    r *= q;
  }
  return r;
}

}  // namespace

Field::Field(unsigned q) : q_(q) {
  if (!is_prime(q)) {
    throw precondition_error("field modulus must be prime, got " +
                             std::to_string(q));
  }
}

std::uint8_t Field::inv(std::uint8_t a) const {
  if (a == 0) throw precondition_error("zero has no inverse");
  // Fermat: a^(q-2) mod q.
  unsigned r = 1, base = a, e = q_ - 2;
  while (e > 0) {
    if (e & 1) r = (r * base) % q_;
    base = (base * base) % q_;
    e >>= 1;
  }
  return static_cast<std::uint8_t>(r);
}

Vec::Vec(Field f, std::initializer_list<int> digits) : field_(f) {
  v_.reserve(digits.size());
  for (int d : digits) {
    if (d < 0 || static_cast<unsigned>(d) >= f.q()) {
      throw precondition_error("digit out of range for field");
    }
    v_.push_back(static_cast<std::uint8_t>(d));
  }
}

Vec Vec::from_digits(Field f, const std::string& digits) {
  Vec out(f, digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= f.q()) {
      throw parse_error("bad digit '" + std::string(1, c) + "' for GF(" +
                        std::to_string(f.q()) + ")");
    }
    out.v_[i] = static_cast<std::uint8_t>(c - '0');
  }
  return out;
}

void Vec::set(std::size_t i, std::uint8_t value) {
  if (value >= field_.q()) throw precondition_error("digit out of range");
  v_[i] = value;
}

bool Vec::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::uint8_t d) { return d == 0; });
}

Vec Vec::operator+(const Vec& o) const {
  require_same_field(field_, o.field_);
  if (size() != o.size()) throw precondition_error("length mismatch");
  Vec out(field_, size());
  for (std::size_t i = 0; i < size(); ++i) out.v_[i] = field_.add(v_[i], o.v_[i]);
  return out;
}

Vec Vec::operator-(const Vec& o) const {
  require_same_field(field_, o.field_);
  if (size() != o.size()) throw precondition_error("length mismatch");
  Vec out(field_, size());
  for (std::size_t i = 0; i < size(); ++i) out.v_[i] = field_.sub(v_[i], o.v_[i]);
  return out;
}

Vec Vec::scaled(std::uint8_t c) const {
  Vec out(field_, size());
  for (std::size_t i = 0; i < size(); ++i) out.v_[i] = field_.mul(v_[i], c);
  return out;
}

std::uint8_t Vec::dot(const Vec& o) const {
  require_same_field(field_, o.field_);
  if (size() != o.size()) throw precondition_error("length mismatch");
  unsigned acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc += v_[i] * o.v_[i];
  return static_cast<std::uint8_t>(acc % field_.q());
}

std::string Vec::digits() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) s[i] = static_cast<char>('0' + v_[i]);
  return s;
}

std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
  if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.v_.size(); ++i) {
    if (auto c = a.v_[i] <=> b.v_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Mat Mat::from_rows(Field f, const std::vector<std::vector<int>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw precondition_error("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, static_cast<std::uint8_t>(rows[r][c]));
    }
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) throw precondition_error("from_rows needs at least one row");
  Mat m(rows.front().field(), rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw precondition_error("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Mat::set(std::size_t r, std::size_t c, std::uint8_t value) {
  if (value >= field_.q()) throw precondition_error("digit out of range");
  e_[r * cols_ + c] = value;
}

Vec Mat::row(std::size_t r) const {
  Vec out(field_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.set(c, at(r, c));
  return out;
}

Vec Mat::col(std::size_t c) const {
  Vec out(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.set(r, at(r, c));
  return out;
}

Vec Mat::apply(const Vec& v) const {
  require_same_field(field_, v.field());
  if (v.size() != cols_) throw precondition_error("length mismatch");
  Vec out(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out.set(r, static_cast<std::uint8_t>(acc % field_.q()));
  }
  return out;
}

namespace detail {

RrefResult rref_generic(const Mat& m) {
  Mat a = m;
  const Field f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = pr;
    while (sel < rows && a.at(sel, pc) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::uint8_t t = a.at(pr, c);
        a.set(pr, c, a.at(sel, c));
        a.set(sel, c, t);
      }
    }
    std::uint8_t pinv = f.inv(a.at(pr, pc));
    for (std::size_t c = 0; c < cols; ++c) a.set(pr, c, f.mul(a.at(pr, c), pinv));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      std::uint8_t factor = a.at(r, pc);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        a.set(r, c, f.sub(a.at(r, c), f.mul(factor, a.at(pr, c))));
      }
    }
    pivots.push_back(pc);
    ++pr;
  }
  return RrefResult{a, pivots.size(), pivots};
}

namespace {

// GF(2) elimination on 64-bit packed rows.
RrefResult rref_packed2(const Mat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m.at(r, c)) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  auto test = [&](std::size_t r, std::size_t c) {
    return (bits[r * words + c / 64] >> (c % 64)) & 1;
  };
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = pr;
    while (sel < rows && !test(sel, pc)) ++sel;
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t w = 0; w < words; ++w) {
        std::swap(bits[pr * words + w], bits[sel * words + w]);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != pr && test(r, pc)) {
        for (std::size_t w = 0; w < words; ++w) {
          bits[r * words + w] ^= bits[pr * words + w];
        }
      }
    }
    pivots.push_back(pc);
    ++pr;
  }
  Mat out(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.set(r, c, static_cast<std::uint8_t>(test(r, c)));
    }
  }
  return RrefResult{out, pivots.size(), pivots};
}

}  // namespace
}  // namespace detail

RrefResult rref(const Mat& m) {
  if (m.field().q() == 2) return detail::rref_packed2(m);
  return detail::rref_generic(m);
}

std::vector<Vec> kernel_basis(const Mat& m) {
  const Field f = m.field();
  const std::size_t cols = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : rr.pivot_cols) is_pivot[pc] = true;

  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(f, cols);
    v.set(fc, 1);
    for (std::size_t pi = 0; pi < rr.pivot_cols.size(); ++pi) {
      // Pivot row pi constrains column pivot_cols[pi].
      v.set(rr.pivot_cols[pi], f.neg(rr.reduced.at(pi, fc)));
    }
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Vec> enumerate_span(std::span<const Vec> basis, Field f,
                                std::size_t len, std::size_t cap) {
  for (const Vec& b : basis) {
    if (b.size() != len || !(b.field() == f)) {
      throw precondition_error("basis vector does not match ambient space");
    }
  }
  if (!basis.empty() && span_dim(basis, f, len) != basis.size()) {
    throw precondition_error("enumerate_span requires an independent basis");
  }
  std::size_t count = pow_saturating(f.q(), basis.size());
  if (count > cap) {
    throw cap_error("span of dimension " + std::to_string(basis.size()) +
                    " over GF(" + std::to_string(f.q()) +
                    ") exceeds enumeration cap");
  }
  std::vector<Vec> out;
  out.reserve(count);
  out.push_back(Vec(f, len));
  for (const Vec& b : basis) {
    std::size_t prev = out.size();
    for (std::uint8_t c = 1; c < f.q(); ++c) {
      Vec scaled = b.scaled(c);
      for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] + scaled);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> span_basis(std::span<const Vec> vecs, Field f,
                            std::size_t len) {
  if (vecs.empty()) return {};
  Mat m(f, vecs.size(), len);
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    if (vecs[r].size() != len) throw precondition_error("length mismatch");
    for (std::size_t c = 0; c < len; ++c) m.set(r, c, vecs[r][c]);
  }
  RrefResult rr = rref(m);
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < rr.rank; ++r) basis.push_back(rr.reduced.row(r));
  return basis;
}

std::size_t span_dim(std::span<const Vec> vecs, Field f, std::size_t len) {
  return span_basis(vecs, f, len).size();
}

bool in_span(std::span<const Vec> basis, const Vec& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  std::vector<Vec> rows(basis.begin(), basis.end());
  std::size_t d0 = span_dim(rows, v.field(), v.size());
  rows.push_back(v);
  return span_dim(rows, v.field(), v.size()) == d0;
}

Vec functional_for(std::span<const Vec> hyperplane_basis, const Vec& alpha) {
  if (in_span(hyperplane_basis, alpha)) {
    throw precondition_error("alpha lies in the hyperplane");
  }
  const Field f = alpha.field();
  const std::size_t n = alpha.size();

  // Constraints: phi.h = 0 for each basis row, phi.alpha = 1. Treated as a
  // linear system in phi with coefficient rows h (rhs 0) and alpha (rhs 1).
  std::vector<Vec> coeff(hyperplane_basis.begin(), hyperplane_basis.end());
  coeff.push_back(alpha);
  std::vector<std::uint8_t> rhs(coeff.size(), 0);
  rhs.back() = 1;

  auto feasible = [&](const std::vector<std::uint8_t>& fixed,
                      std::size_t nfixed) {
    // Substitute the fixed prefix of phi, then check that the residual
    // system in the free suffix is consistent.
    std::size_t free_n = n - nfixed;
    Mat a(f, coeff.size(), free_n + 1);  // augmented column at the end
    for (std::size_t r = 0; r < coeff.size(); ++r) {
      unsigned acc = 0;
      for (std::size_t c = 0; c < nfixed; ++c) acc += coeff[r][c] * fixed[c];
      std::uint8_t b = f.sub(rhs[r], static_cast<std::uint8_t>(acc % f.q()));
      for (std::size_t c = 0; c < free_n; ++c) a.set(r, c, coeff[r][nfixed + c]);
      a.set(r, free_n, b);
    }
    RrefResult rr = rref(a);
    for (std::size_t r = 0; r < rr.rank; ++r) {
      // Inconsistent iff a pivot lands in the augmented column.
      if (rr.pivot_cols[r] == free_n) return false;
    }
    return true;
  };

  std::vector<std::uint8_t> phi(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    bool placed = false;
    for (std::uint8_t val = 0; val < f.q(); ++val) {
      phi[pos] = val;
      if (feasible(phi, pos + 1)) {
        placed = true;
        break;
      }
    }
    if (!placed) throw internal_error("separating functional solve failed");
  }
  Vec out(f, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, phi[i]);
  return out;
}

std::vector<std::vector<Vec>> hyperplanes_avoiding(
    std::span<const Vec> space_basis, const Vec& alpha) {
  const Field f = alpha.field();
  const std::size_t len = alpha.size();
  if (alpha.is_zero()) throw precondition_error("alpha must be nonzero");
  if (!in_span(space_basis, alpha)) {
    throw precondition_error("alpha is not in the given space");
  }
  std::vector<Vec> basis = span_basis(space_basis, f, len);
  const std::size_t s = basis.size();
  if (pow_saturating(f.q(), s) > kDefaultEnumCap) {
    throw cap_error("state space too large to enumerate hyperplanes");
  }

  // Coordinates of alpha with respect to the canonical basis: solve
  // sum_j x_j basis_j = alpha by augmented elimination.
  Mat sys(f, len, s + 1);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t j = 0; j < s; ++j) sys.set(r, j, basis[j][r]);
    sys.set(r, s, alpha[r]);
  }
  RrefResult rr = rref(sys);
  std::vector<std::uint8_t> acoord(s, 0);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    acoord[rr.pivot_cols[r]] = rr.reduced.at(r, s);
  }

  // Hyperplanes of the space avoiding alpha correspond one-to-one to
  // coordinate functionals psi with psi(alpha) = 1.
  std::vector<std::pair<Vec, std::vector<Vec>>> keyed;
  std::vector<std::uint8_t> psi(s, 0);
  std::size_t total = pow_saturating(f.q(), s);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t v = code;
    unsigned acc = 0;
    for (std::size_t j = 0; j < s; ++j) {
      psi[j] = static_cast<std::uint8_t>(v % f.q());
      v /= f.q();
      acc += psi[j] * acoord[j];
    }
    if (acc % f.q() != 1) continue;
    // Kernel of psi in coordinates, mapped back to ambient vectors.
    Mat prow(f, 1, s);
    for (std::size_t j = 0; j < s; ++j) prow.set(0, j, psi[j]);
    std::vector<Vec> hyp;
    for (const Vec& kv : kernel_basis(prow)) {
      Vec ambient(f, len);
      for (std::size_t j = 0; j < s; ++j) {
        if (kv[j]) ambient = ambient + basis[j].scaled(kv[j]);
      }
      hyp.push_back(ambient);
    }
    hyp = span_basis(hyp, f, len);
    keyed.emplace_back(functional_for(hyp, alpha), std::move(hyp));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<Vec>> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace tbt
