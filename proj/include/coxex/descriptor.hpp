#ifndef COXEX_DESCRIPTOR_HPP
#define COXEX_DESCRIPTOR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coxex {

/// Irreducible finite Coxeter families.
enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

/// Names one irreducible finite Coxeter group. `m` is only meaningful for I2.
struct CoxeterDescriptor {
  Family family = Family::A;
  int rank = 1;
  int m = 0;

  bool operator==(const CoxeterDescriptor&) const = default;
};

/// A finite Coxeter group as a direct product of irreducible factors.
using CoxeterProduct = std::vector<CoxeterDescriptor>;

/// Throws std::invalid_argument when the rank (or m) is out of range.
void validate(const CoxeterDescriptor& d);

/// Symmetric Coxeter matrix with 1 on the diagonal.
std::vector<std::vector<int>> coxeter_matrix(const CoxeterDescriptor& d);

bool is_crystallographic(Family f);

/// Order of the group, or 0 if it does not fit in 64 bits.
std::uint64_t group_order(const CoxeterDescriptor& d);
std::uint64_t group_order(const CoxeterProduct& p);

std::string to_string(Family f);
std::string to_string(const CoxeterDescriptor& d);
std::string to_string(const CoxeterProduct& p);

/// Parses "A4", "B3", "D12", "I2(5)", "H3", "F4", "E6", ...
CoxeterDescriptor parse_descriptor(std::string_view text);

/// Parses a product such as "A2xA1" or "A1xA1xA1".
CoxeterProduct parse_product(std::string_view text);

/// Descriptor from the CLI-style triple (--type, --rank, --m).
CoxeterDescriptor make_descriptor(std::string_view type, int rank, int m = 0);

}  // namespace coxex

#endif  // COXEX_DESCRIPTOR_HPP
