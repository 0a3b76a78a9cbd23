#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monolab/domain.hpp"
#include "monolab/rational.hpp"

namespace monolab {

// Parameters of the hard input family on {0,1}^m with epsilon = 2^-a.
// The blocks S_k are the 2^(a-1) aligned subcubes of dimension
// m' = m + 1 - a; block k holds the words [ (k-1)*2^m', k*2^m' ).
struct FamilyParams {
    int m = 0;
    int log_inv_eps = 0;           // a, so epsilon = 2^-a
    int m_prime = 0;               // m + 1 - a
    std::int64_t block_count = 0;  // 2^(a-1) = 1/(2*epsilon)

    // Requires 1 <= a <= m-1, i.e. 2^{1-m} <= epsilon <= 1/2.
    static FamilyParams make(int m, int log_inv_eps);

    Rational epsilon() const;         // 2^-a
    Rational perturbed_mass() const;  // epsilon / m', the weight of each g
    std::int64_t perturbed_count() const { return static_cast<std::int64_t>(m_prime) * block_count; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// "1/8", "1/2^3", or a bare power of two denominator like "0/..."-free forms.
// Returns a = log2(1/epsilon). Rejects anything that is not a power of 1/2.
int parse_epsilon(std::string_view text);

// Either the base function f = 2*val, or g_{j,k} which subtracts 2^j + 1 on
// {x in S_k : x_j = 1}. All functions are injective on the cube.
class HardFunction {
public:
    static HardFunction base(const FamilyParams& p) { return HardFunction(p, 0, 0); }
    static HardFunction perturbed(const FamilyParams& p, int j, std::int64_t k);

    bool is_base() const { return j_ == 0; }
    int j() const;
    std::int64_t k() const;
    const FamilyParams& params() const { return params_; }
    std::string name() const;  // "base" or "g_j_k"

    friend bool operator==(const HardFunction&, const HardFunction&) = default;

private:
    HardFunction(const FamilyParams& p, int j, std::int64_t k) : params_(p), j_(j), k_(k) {}

    FamilyParams params_;
    int j_;
    std::int64_t k_;
};

// The unique k with val(x) in [2(k-1) eps 2^m, 2k eps 2^m); equivalently one
// plus the integer formed by the bits above position m'.
std::int64_t block_index(const BitPoint& x, const FamilyParams& p);

std::int64_t evaluate(const HardFunction& h, const BitPoint& x);

struct WeightedSupport {
    // Base first, then perturbed in lexicographic (j, k) order.
    std::vector<std::pair<HardFunction, Rational>> entries;
    Rational total_mass() const;
};

// Mass 1/2 on base, epsilon/m' on each g_{j,k}. Exact: the draw is a fair
// coin plus uniform (j, k).
HardFunction sample(const FamilyParams& p, std::mt19937_64& rng);
WeightedSupport support(const FamilyParams& p);

// f~(y) = f(phi(y)) on [n]^d.
struct LiftedFunction {
    HardFunction h;
    DomainParams dom;
    std::int64_t operator()(const GridPoint& y) const { return evaluate(h, phi(y, dom)); }
};
LiftedFunction lift_to_hypergrid(const HardFunction& h, const DomainParams& dom);

}  // namespace monolab
