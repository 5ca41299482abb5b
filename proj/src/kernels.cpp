#include "vilenkin/kernels.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vilenkin/character.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

namespace {

void check_literal(const BigInt& n, const char* name) {
  if (n < 1) {
    throw std::invalid_argument(std::string(name) + ": n must be positive");
  }
  if (n > kKernelSumGuard) {
    throw std::invalid_argument(std::string(name) +
                                ": n exceeds the literal-sum guard");
  }
}

// Walks k = 0, 1, ... as a mixed-radix counter and hands each character
// value psi_k(x) to the sink. Per-position power tables keep every factor
// on the exact unit-root path.
template <typename Sink>
void literal_sum(const RadixSequence& m, std::uint64_t count,
                 const GroupPoint& x, Sink&& sink) {
  std::vector<std::uint32_t> digits;
  std::vector<std::vector<std::complex<double>>> powers;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::complex<double> value = 1.0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
      value *= powers[j][digits[j]];
    }
    sink(k, value);
    std::size_t pos = 0;
    while (true) {
      if (pos == digits.size()) {
        digits.push_back(0);
        const std::uint32_t radix = m[pos];
        std::vector<std::complex<double>> table(radix);
        for (std::uint32_t d = 0; d < radix; ++d) {
          table[d] = unit_root(std::uint64_t{x.digit(pos)} * d % radix, radix);
        }
        powers.push_back(std::move(table));
      }
      if (++digits[pos] == m[pos]) {
        digits[pos] = 0;
        ++pos;
      } else {
        break;
      }
    }
  }
}

}  // namespace

std::complex<double> dirichlet(const RadixSequence& m, const BigInt& n,
                               const GroupPoint& x) {
  check_literal(n, "dirichlet");
  const auto count = n.convert_to<std::uint64_t>();
  std::complex<double> total = 0.0;
  literal_sum(m, count, x,
              [&](std::uint64_t, std::complex<double> value) { total += value; });
  return total;
}

std::complex<double> paley_dirichlet(const ScaleSequence& scales,
                                     std::size_t depth, const GroupPoint& x) {
  for (std::size_t j = 0; j < depth; ++j) {
    if (x.digit(j) != 0) {
      return 0.0;
    }
  }
  return to_double(scales.at(depth));
}

std::complex<double> fejer_kernel(const RadixSequence& m, const BigInt& n,
                                  const GroupPoint& x) {
  check_literal(n, "fejer_kernel");
  const auto count = n.convert_to<std::uint64_t>();
  std::complex<double> total = 0.0;
  literal_sum(m, count, x, [&](std::uint64_t k, std::complex<double> value) {
    total += to_double(BigRat(BigInt(count - k), BigInt(count))) * value;
  });
  return total;
}

SampledFunction kernel_table(const ScaleSequence& scales, std::size_t level,
                             KernelKind kind, const BigInt& n) {
  if (n < 1) {
    throw std::invalid_argument("kernel_table: n must be positive");
  }
  const std::size_t size = dense_size(scales, level);
  const BigInt block = scales.at(level);
  const BigInt whole = n / block;
  const BigInt rem = n % block;
  std::vector<std::complex<double>> coefficients(size);
  for (std::size_t r = 0; r < size; ++r) {
    const BigInt hits = whole + (BigInt(r) < rem ? 1 : 0);
    if (kind == KernelKind::dirichlet) {
      coefficients[r] = to_double(hits);
    } else {
      const BigInt linear = hits * r + block * (hits * (hits - 1) / 2);
      coefficients[r] = to_double(BigRat(hits) - BigRat(linear, n));
    }
  }
  return inverse(scales, level, coefficients);
}

}  // namespace vilenkin
