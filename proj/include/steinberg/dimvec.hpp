// Dimension vectors for the B/C isotropic flag varieties and the component
// bookkeeping (components are indexed by the partial sums nubar_1..nubar_n).
#ifndef STEINBERG_DIMVEC_HPP
#define STEINBERG_DIMVEC_HPP

#include <string>
#include <vector>

namespace steinberg {

enum class LieType { B, C };

inline char lie_type_char(LieType t) { return t == LieType::B ? 'B' : 'C'; }
LieType lie_type_from_string(const std::string& s);

struct DimVec {
    LieType lie_type{LieType::C};
    int n = 0;                 // number of steps
    int d = 0;                 // torus rank
    std::vector<int> nu;       // nu_1 .. nu_{2n+1}
    std::vector<int> nubar;    // partial sums nubar_1 .. nubar_{2n+1}

    int ambient_dim() const { return lie_type == LieType::B ? 2 * d + 1 : 2 * d; }
    int middle_size() const { return d - nubar[n - 1]; }     // positions past block n

    // block of x-position t (0-based): 1..n, or 0 for the middle block
    int block_of(int t) const;

    std::vector<int> key() const;                            // (nubar_1..nubar_n)
    std::string str() const;

    bool operator==(const DimVec&) const = default;
};

// Validates all invariants (symmetry, total, nonnegative middle); throws on
// violation.
DimVec validate_dimvec(LieType lie_type, int n, int d, const std::vector<int>& nu);

// DimVec from component key (nubar_1 <= ... <= nubar_n <= d).
DimVec dimvec_from_key(LieType lie_type, int n, int d, const std::vector<int>& key);

// All components; count is C(d+n, n).
std::vector<DimVec> components(LieType lie_type, int n, int d);

// nu +- 1_i, with the mirror entries adjusted so the symmetry is kept.
// Returns false when the result is not a valid dimension vector.
bool shift_key(const std::vector<int>& key, int i /*1-based*/, int delta, int d,
               std::vector<int>& out);

} // namespace steinberg

#endif
