#include "steinberg/dimvec.hpp"

#include <sstream>
#include <stdexcept>

namespace steinberg {

LieType lie_type_from_string(const std::string& s)
{
    if (s == "B" || s == "b") return LieType::B;
    if (s == "C" || s == "c") return LieType::C;
    throw std::invalid_argument("lie type must be B or C");
}

int DimVec::block_of(int t) const
{
    for (int i = 1; i <= n; ++i)
        if (t < nubar[i - 1]) return i;
    return 0;
}

std::vector<int> DimVec::key() const
{
    return std::vector<int>(nubar.begin(), nubar.begin() + n);
}

std::string DimVec::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (i) os << ",";
        os << nu[i];
    }
    os << ")";
    return os.str();
}

DimVec validate_dimvec(LieType lie_type, int n, int d, const std::vector<int>& nu)
{
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < 1 || d > 6) throw std::invalid_argument("d must be in 1..6");
    if (static_cast<int>(nu.size()) != 2 * n + 1)
        throw std::invalid_argument("dimension vector must have 2n+1 entries");
    int total = 0;
    for (int v : nu) {
        if (v < 0) throw std::invalid_argument("negative dimension vector entry");
        total += v;
    }
    int ambient = lie_type == LieType::B ? 2 * d + 1 : 2 * d;
    if (total != ambient)
        throw std::invalid_argument("dimension vector entries must sum to " + std::to_string(ambient));
    for (int i = 1; i <= n; ++i)
        if (nu[i - 1] != nu[2 * n + 1 - i])
            throw std::invalid_argument("dimension vector breaks the perp symmetry");
    DimVec dv;
    dv.lie_type = lie_type;
    dv.n = n;
    dv.d = d;
    dv.nu = nu;
    dv.nubar.resize(2 * n + 1);
    int s = 0;
    for (int i = 0; i < 2 * n + 1; ++i) {
        s += nu[i];
        dv.nubar[i] = s;
    }
    if (dv.nubar[n - 1] > d)
        throw std::invalid_argument("isotropic part exceeds rank (negative middle block)");
    return dv;
}

DimVec dimvec_from_key(LieType lie_type, int n, int d, const std::vector<int>& key)
{
    if (static_cast<int>(key.size()) != n) throw std::invalid_argument("component key size mismatch");
    std::vector<int> nu(2 * n + 1, 0);
    int prev = 0;
    for (int i = 0; i < n; ++i) {
        if (key[i] < prev || key[i] > d) throw std::invalid_argument("invalid component key");
        nu[i] = key[i] - prev;
        nu[2 * n - i] = nu[i];
        prev = key[i];
    }
    int ambient = lie_type == LieType::B ? 2 * d + 1 : 2 * d;
    nu[n] = ambient - 2 * prev;
    return validate_dimvec(lie_type, n, d, nu);
}

std::vector<DimVec> components(LieType lie_type, int n, int d)
{
    std::vector<DimVec> out;
    std::vector<int> key(n, 0);
    while (true) {
        out.push_back(dimvec_from_key(lie_type, n, d, key));
        int i = n - 1;
        while (i >= 0) {
            ++key[i];
            if (key[i] <= d) break;
            --i;
        }
        if (i < 0) break;
        for (int j = i + 1; j < n; ++j) key[j] = key[i];
        bool ok = true;
        for (int j = 0; j + 1 < n; ++j) ok = ok && key[j] <= key[j + 1];
        if (!ok) break;
    }
    return out;
}

bool shift_key(const std::vector<int>& key, int i, int delta, int d, std::vector<int>& out)
{
    out = key;
    out[i - 1] += delta;
    int prev = 0;
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (out[j] < prev || out[j] > d) return false;
        prev = out[j];
    }
    return true;
}

} // namespace steinberg
