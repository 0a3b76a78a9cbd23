#include "monolab/hard_family.hpp"

#include <charconv>
#include <stdexcept>

#include "monolab/rng_util.hpp"

namespace monolab {

namespace {

// Keeps every rational this library derives from a family inside int64.
constexpr int kMaxLogInvEps = 40;
constexpr int kMaxFamilyBits = 1 << 20;
constexpr std::int64_t kMaxSupportEntries = std::int64_t{1} << 20;

}  // namespace

FamilyParams FamilyParams::make(int m, int log_inv_eps) {
    if (m < 2 || m > kMaxFamilyBits) {
        throw std::invalid_argument("family needs m >= 2 (and sane): got m = " + std::to_string(m));
    }
    if (log_inv_eps < 1 || log_inv_eps > m - 1) {
        throw std::invalid_argument(
            "epsilon = 1/2^" + std::to_string(log_inv_eps) + " invalid for m = " + std::to_string(m) +
            "; need 2^{1-m} <= epsilon <= 1/2, i.e. 1 <= log2(1/epsilon) <= m-1");
    }
    if (log_inv_eps > kMaxLogInvEps) {
        throw CapacityError("log2(1/epsilon) above supported " + std::to_string(kMaxLogInvEps));
    }
    FamilyParams p;
    p.m = m;
    p.log_inv_eps = log_inv_eps;
    p.m_prime = m + 1 - log_inv_eps;
    p.block_count = std::int64_t{1} << (log_inv_eps - 1);
    return p;
}

Rational FamilyParams::epsilon() const {
    return pow2(-log_inv_eps);
}

Rational FamilyParams::perturbed_mass() const {
    return epsilon() / m_prime;
}

int parse_epsilon(std::string_view text) {
    const auto parse_int = [](std::string_view s) {
        int out = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("bad epsilon: '" + std::string(s) + "'");
        }
        return out;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || parse_int(text.substr(0, slash)) != 1) {
        throw std::invalid_argument("epsilon must be a power of 1/2, like '1/8' or '1/2^3'");
    }
    std::string_view den = text.substr(slash + 1);
    const auto caret = den.find('^');
    if (caret != std::string_view::npos) {
        if (den.substr(0, caret) != "2") {
            throw std::invalid_argument("epsilon must be a power of 1/2, like '1/8' or '1/2^3'");
        }
        const int a = parse_int(den.substr(caret + 1));
        if (a < 1) throw std::invalid_argument("epsilon must be at most 1/2");
        return a;
    }
    const int q = parse_int(den);
    if (q < 2 || (q & (q - 1)) != 0) {
        throw std::invalid_argument("epsilon denominator must be a power of two >= 2");
    }
    int a = 0;
    for (int v = q; v > 1; v >>= 1) ++a;
    return a;
}

HardFunction HardFunction::perturbed(const FamilyParams& p, int j, std::int64_t k) {
    if (j < 1 || j > p.m_prime) throw std::invalid_argument("perturbation bit j outside [1, m']");
    if (k < 1 || k > p.block_count) throw std::invalid_argument("block index k outside [1, 1/(2 eps)]");
    return HardFunction(p, j, k);
}

int HardFunction::j() const {
    if (is_base()) throw std::invalid_argument("base function has no perturbation bit");
    return j_;
}

std::int64_t HardFunction::k() const {
    if (is_base()) throw std::invalid_argument("base function has no block index");
    return k_;
}

std::string HardFunction::name() const {
    if (is_base()) return "base";
    return "g_" + std::to_string(j_) + "_" + std::to_string(k_);
}

std::int64_t block_index(const BitPoint& x, const FamilyParams& p) {
    if (x.size() != p.m) throw std::invalid_argument("point size does not match family m");
    return static_cast<std::int64_t>(x.word() >> p.m_prime) + 1;
}

std::int64_t evaluate(const HardFunction& h, const BitPoint& x) {
    const FamilyParams& p = h.params();
    if (x.size() != p.m) throw std::invalid_argument("point size does not match family m");
    const std::int64_t base = 2 * static_cast<std::int64_t>(val(x));
    if (h.is_base()) return base;
    if (x.bit(h.j()) == 1 && block_index(x, p) == h.k()) {
        return base - (std::int64_t{1} << h.j()) - 1;
    }
    return base;
}

HardFunction sample(const FamilyParams& p, std::mt19937_64& rng) {
    if (uniform_below(rng, 2) == 0) return HardFunction::base(p);
    const int j = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(p.m_prime)));
    const std::int64_t k =
        1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(p.block_count)));
    return HardFunction::perturbed(p, j, k);
}

WeightedSupport support(const FamilyParams& p) {
    if (p.perturbed_count() > kMaxSupportEntries) {
        throw CapacityError("support has " + std::to_string(p.perturbed_count()) + " perturbed entries");
    }
    WeightedSupport s;
    s.entries.reserve(static_cast<std::size_t>(1 + p.perturbed_count()));
    s.entries.emplace_back(HardFunction::base(p), Rational(1, 2));
    const Rational mass = p.perturbed_mass();
    for (int j = 1; j <= p.m_prime; ++j) {
        for (std::int64_t k = 1; k <= p.block_count; ++k) {
            s.entries.emplace_back(HardFunction::perturbed(p, j, k), mass);
        }
    }
    return s;
}

Rational WeightedSupport::total_mass() const {
    Rational total(0);
    for (const auto& [h, mass] : entries) total += mass;
    return total;
}

LiftedFunction lift_to_hypergrid(const HardFunction& h, const DomainParams& dom) {
    if (dom.m != h.params().m) {
        throw std::invalid_argument("domain has m = " + std::to_string(dom.m) + ", function needs " +
                                    std::to_string(h.params().m));
    }
    return LiftedFunction{h, dom};
}

}  // namespace monolab
