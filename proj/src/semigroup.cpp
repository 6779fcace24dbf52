#include "tracelab/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tracelab {

namespace {

constexpr i64 kWindowGuard = i64(1) << 26;

// Least member in each residue class mod m, for the monoid generated by
// `gens` (not necessarily minimal).  Dijkstra on the residue graph.
std::vector<i64> apery_by_dijkstra(const std::vector<i64>& gens, i64 m) {
    const i64 inf = std::numeric_limits<i64>::max();
    std::vector<i64> least(static_cast<size_t>(m), inf);
    least[0] = 0;
    using Node = std::pair<i64, i64>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
        auto [v, r] = pq.top();
        pq.pop();
        if (v != least[static_cast<size_t>(r)]) continue;
        for (i64 g : gens) {
            if (g % m == 0) continue;
            i64 nr = (r + g) % m;
            if (v + g < least[static_cast<size_t>(nr)]) {
                least[static_cast<size_t>(nr)] = v + g;
                pq.emplace(v + g, nr);
            }
        }
    }
    return least;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<i64> gens) {
    if (gens.empty()) throw std::invalid_argument("empty input");
    for (i64 g : gens)
        if (g <= 0) throw std::invalid_argument("generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    i64 d = 0;
    for (i64 g : gens) d = std::gcd(d, g);
    if (d != 1) throw std::invalid_argument("not cofinite");

    NumericalSemigroup S;
    const i64 m = gens.front();
    const std::vector<i64> apery = apery_by_dijkstra(gens, m);
    S.frobenius_ = *std::max_element(apery.begin(), apery.end()) - m;

    const i64 window = S.frobenius_ + 2 * m;
    if (window > kWindowGuard) throw std::invalid_argument("window guard");
    S.member_.assign(static_cast<size_t>(window + 1), false);
    for (i64 x = 0; x <= window; ++x)
        S.member_[static_cast<size_t>(x)] = apery[static_cast<size_t>(x % m)] <= x;

    S.materialize_from_members();
    return S;
}

NumericalSemigroup NumericalSemigroup::from_gaps(const std::vector<i64>& gaps) {
    for (i64 g : gaps)
        if (g <= 0) throw std::invalid_argument("gaps must be positive");
    NumericalSemigroup S;
    S.frobenius_ = gaps.empty() ? -1 : *std::max_element(gaps.begin(), gaps.end());

    i64 m = 1;  // smallest positive member
    while (std::find(gaps.begin(), gaps.end(), m) != gaps.end()) ++m;
    const i64 window = S.frobenius_ + 2 * m;
    if (window > kWindowGuard) throw std::invalid_argument("window guard");
    S.member_.assign(static_cast<size_t>(window + 1), true);
    for (i64 g : gaps) S.member_[static_cast<size_t>(g)] = false;

    // The complement of the gap set must be additively closed.
    for (i64 a = 1; a <= S.frobenius_; ++a) {
        if (!S.member_[static_cast<size_t>(a)]) continue;
        for (i64 b = a; a + b <= S.frobenius_; ++b)
            if (S.member_[static_cast<size_t>(b)] && !S.member_[static_cast<size_t>(a + b)])
                throw std::invalid_argument("gap set complement not closed under addition");
    }

    S.materialize_from_members();
    return S;
}

void NumericalSemigroup::materialize_from_members() {
    gaps_.clear();
    for (i64 x = 1; x <= frobenius_; ++x)
        if (!member_[static_cast<size_t>(x)]) gaps_.push_back(x);

    // Minimal generators: nonzero members not expressible as a sum of two
    // nonzero members.  They all lie in [1, frobenius + multiplicity].
    gens_.clear();
    i64 m = 1;
    while (!member_[static_cast<size_t>(m)]) ++m;
    const i64 bound = frobenius_ + m;
    for (i64 g = m; g <= bound; ++g) {
        if (!contains(g)) continue;
        bool decomposable = false;
        for (i64 a = m; !decomposable && a + m <= g; ++a)
            decomposable = contains(a) && contains(g - a);
        if (!decomposable) gens_.push_back(g);
    }
    if (gens_.empty()) gens_.push_back(1);  // full monoid
}

bool NumericalSemigroup::contains(i64 n) const {
    if (n < 0) return false;
    if (n >= static_cast<i64>(member_.size())) return true;
    return member_[static_cast<size_t>(n)];
}

std::vector<i64> NumericalSemigroup::apery_set(i64 n) const {
    if (n <= 0 || !contains(n)) throw std::invalid_argument("invalid Apéry base");
    std::vector<i64> out(static_cast<size_t>(n));
    for (i64 r = 0; r < n; ++r) {
        i64 x = r;
        while (!contains(x)) x += n;
        out[static_cast<size_t>(r)] = x;
    }
    return out;
}

bool NumericalSemigroup::has_minimal_multiplicity() const {
    return multiplicity() == embedding_dimension();
}

bool NumericalSemigroup::is_symmetric() const {
    for (i64 x = 0; x <= frobenius_; ++x)
        if (contains(x) == contains(frobenius_ - x)) return false;
    return true;
}

bool NumericalSemigroup::is_arf() const {
    // Shifted tails at members s > frobenius are the full monoid; only
    // members in [0, frobenius] can witness a closure failure, and a failing
    // sum must itself land at or below the Frobenius number.
    for (i64 s = 0; s <= frobenius_; ++s) {
        if (!contains(s)) continue;
        std::vector<i64> tail;  // { t - s : t in S, s < t <= frobenius }
        for (i64 t = s + 1; t <= frobenius_; ++t)
            if (contains(t)) tail.push_back(t - s);
        for (size_t i = 0; i < tail.size(); ++i)
            for (size_t j = i; j < tail.size(); ++j) {
                const i64 sum = tail[i] + tail[j];
                if (sum + s <= frobenius_ && !contains(sum + s)) return false;
            }
    }
    return true;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream os;
    os << '<';
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ',';
        os << gens_[i];
    }
    os << '>';
    return os.str();
}

namespace {

void gap_search(i64 n, i64 max_frobenius, std::vector<bool>& member,
                std::vector<i64>& gaps, std::vector<std::vector<i64>>& out) {
    if (n > max_frobenius) {
        out.push_back(gaps);
        return;
    }
    bool forced = false;  // n = a + b with both nonzero members
    for (i64 a = 1; !forced && 2 * a <= n; ++a)
        forced = member[static_cast<size_t>(a)] && member[static_cast<size_t>(n - a)];
    member[static_cast<size_t>(n)] = true;
    gap_search(n + 1, max_frobenius, member, gaps, out);
    if (!forced) {
        member[static_cast<size_t>(n)] = false;
        gaps.push_back(n);
        gap_search(n + 1, max_frobenius, member, gaps, out);
        gaps.pop_back();
        member[static_cast<size_t>(n)] = true;
    }
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_semigroups(i64 max_frobenius) {
    if (max_frobenius < 0 || max_frobenius > 30)
        throw std::invalid_argument("enumeration bound");
    std::vector<std::vector<i64>> gap_sets;
    std::vector<bool> member(static_cast<size_t>(max_frobenius + 1), true);
    std::vector<i64> gaps;
    gap_search(1, max_frobenius, member, gaps, gap_sets);
    std::sort(gap_sets.begin(), gap_sets.end());
    std::vector<NumericalSemigroup> out;
    out.reserve(gap_sets.size());
    for (const auto& g : gap_sets) out.push_back(NumericalSemigroup::from_gaps(g));
    return out;
}

}  // namespace tracelab
