#include "vilenkin/index.hpp"

#include <stdexcept>

namespace vilenkin {

SpectralIndex SpectralIndex::from_value(const ScaleSequence& scales,
                                        BigInt value) {
  if (value < 0)
    throw std::invalid_argument("spectral index: value must be non-negative");
  SpectralIndex out;
  out.value_ = value;
  std::size_t position = 0;
  while (value != 0) {
    const std::uint32_t m = scales.radix_at(position);
    const std::uint32_t digit = (value % m).convert_to<std::uint32_t>();
    if (digit != 0) out.digits_.emplace_back(position, digit);
    value /= m;
    ++position;
  }
  return out;
}

SpectralIndex SpectralIndex::from_digits(const ScaleSequence& scales,
                                         std::vector<Digit> digits) {
  SpectralIndex out;
  out.value_ = 0;
  std::size_t last_position = 0;
  bool first = true;
  for (const auto& [position, digit] : digits) {
    if (!first && position <= last_position)
      throw std::invalid_argument("spectral index: positions must ascend");
    if (digit >= scales.radix_at(position))
      throw std::invalid_argument("spectral index: digit out of range");
    if (digit != 0) {
      out.value_ += scales.at(position) * digit;
      out.digits_.emplace_back(position, digit);
    }
    last_position = position;
    first = false;
  }
  return out;
}

std::uint32_t SpectralIndex::digit(std::size_t position) const {
  for (const auto& [p, d] : digits_) {
    if (p == position) return d;
    if (p > position) break;
  }
  return 0;
}

namespace {

// Merges two sparse digit lists with a digitwise modular combiner.
template <typename Combine>
SpectralIndex merge_digits(const ScaleSequence& scales, const SpectralIndex& a,
                           const SpectralIndex& b, Combine&& combine) {
  std::vector<SpectralIndex::Digit> merged;
  auto ia = a.digits().begin(), ea = a.digits().end();
  auto ib = b.digits().begin(), eb = b.digits().end();
  while (ia != ea || ib != eb) {
    std::size_t position;
    std::uint32_t da = 0, db = 0;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      position = ia->first;
      da = ia->second;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      position = ib->first;
      db = ib->second;
      ++ib;
    } else {
      position = ia->first;
      da = ia->second;
      db = ib->second;
      ++ia;
      ++ib;
    }
    const std::uint32_t d = combine(da, db, scales.radix_at(position));
    if (d != 0) merged.emplace_back(position, d);
  }
  return SpectralIndex::from_digits(scales, std::move(merged));
}

}  // namespace

SpectralIndex oplus(const ScaleSequence& scales, const SpectralIndex& n,
                    const SpectralIndex& k) {
  return merge_digits(scales, n, k,
                      [](std::uint32_t a, std::uint32_t b, std::uint32_t m) {
                        return (a + b) % m;
                      });
}

SpectralIndex digit_complement(const ScaleSequence& scales,
                               const SpectralIndex& n) {
  return merge_digits(scales, n, SpectralIndex{},
                      [](std::uint32_t a, std::uint32_t, std::uint32_t m) {
                        return a == 0 ? 0 : m - a;
                      });
}

}  // namespace vilenkin
