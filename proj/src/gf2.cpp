#include "bcx/gf2.hpp"

#include <algorithm>
#include <bit>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

constexpr std::uint64_t mask_of(std::size_t c) { return std::uint64_t{1} << (c % 64); }

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  return (bits_[r * stride_ + c / 64] & mask_of(c)) != 0;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  auto& w = bits_[r * stride_ + c / 64];
  w = value ? (w | mask_of(c)) : (w & ~mask_of(c));
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  bits_[r * stride_ + c / 64] ^= mask_of(c);
}

std::span<const std::uint64_t> Gf2Matrix::row(std::size_t r) const {
  return std::span<const std::uint64_t>(bits_).subspan(r * stride_, stride_);
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = bits_.data() + dst * stride_;
  const std::uint64_t* s = bits_.data() + src * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   bits_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   bits_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool Gf2Matrix::row_is_zero(std::size_t r) const {
  const auto w = row(r);
  return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t Gf2Matrix::column_weight(std::size_t c) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) n += get(r, c) ? 1 : 0;
  return n;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto w = row(r);
    for (std::size_t i = 0; i < stride_; ++i) {
      for (std::uint64_t m = w[i]; m; m &= m - 1) {
        t.set(i * 64 + static_cast<std::size_t>(std::countr_zero(m)), r);
      }
    }
  }
  return t;
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shapes do not compose");
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto w = a.row(r);
    std::vector<std::uint64_t> acc(out.words_per_row(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t m = w[i]; m; m &= m - 1) {
        const auto k = i * 64 + static_cast<std::size_t>(std::countr_zero(m));
        const auto br = b.row(k);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] ^= br[j];
      }
    }
    for (std::size_t j = 0; j < acc.size(); ++j) {
      for (std::uint64_t m = acc[j]; m; m &= m - 1) {
        out.set(r, j * 64 + static_cast<std::size_t>(std::countr_zero(m)));
      }
    }
  }
  return out;
}

Gf2Matrix rref(Gf2Matrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t r = lead;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(lead, r);
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != lead && m.get(other, c)) m.add_row(other, lead);
    }
    piv.push_back(c);
    ++lead;
  }
  Gf2Matrix out(lead, m.cols());
  for (std::size_t r = 0; r < lead; ++r) {
    const auto w = m.row(r);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t bits = w[i]; bits; bits &= bits - 1) {
        out.set(r, i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(Gf2Matrix m) {
  // Forward elimination only.
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t r = lead;
    while (r < m.rows() && !m.get(r, c)) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(lead, r);
    for (std::size_t other = lead + 1; other < m.rows(); ++other) {
      if (m.get(other, c)) m.add_row(other, lead);
    }
    ++lead;
  }
  return lead;
}

Gf2Matrix null_space(const Gf2Matrix& m) {
  std::vector<std::size_t> pivots;
  const Gf2Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Gf2Matrix basis(free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t f = free_cols[i];
    basis.set(i, f);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      if (r.get(row, f)) basis.set(i, pivots[row]);
    }
  }
  return rref(std::move(basis));
}

}  // namespace bcx
