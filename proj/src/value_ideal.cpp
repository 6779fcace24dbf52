#include "tracelab/value_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tracelab {

namespace {

void require_same(const ValueIdeal& I, const ValueIdeal& J) {
    if (I.semigroup() != J.semigroup()) throw std::invalid_argument("semigroup mismatch");
}

}  // namespace

ValueIdeal::ValueIdeal(NumericalSemigroup S, std::vector<i64> values) : sgp_(std::move(S)) {
    if (values.empty()) throw std::invalid_argument("empty value set");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // Closure of { v + s }: membership of x is "x - v in S for some v".
    const i64 lo = values.front();
    const i64 hi = values.back() + sgp_.frobenius() + 1;  // everything >= hi is present
    std::vector<bool> in(static_cast<size_t>(hi - lo + 1), false);
    for (i64 v : values)
        for (i64 x = v; x <= hi; ++x)
            if (sgp_.contains(x - v)) in[static_cast<size_t>(x - lo)] = true;

    conductor_ = hi;
    sporadic_.clear();
    for (i64 x = lo; x < hi; ++x)
        if (in[static_cast<size_t>(x - lo)]) sporadic_.push_back(x);
    normalize();
}

void ValueIdeal::normalize() {
    std::sort(sporadic_.begin(), sporadic_.end());
    sporadic_.erase(std::unique(sporadic_.begin(), sporadic_.end()), sporadic_.end());
    while (!sporadic_.empty() && sporadic_.back() == conductor_ - 1) {
        sporadic_.pop_back();
        --conductor_;
    }
    assert(sporadic_.empty() || sporadic_.back() < conductor_ - 1);
}

ValueIdeal::ValueIdeal(NumericalSemigroup S, std::vector<i64> sporadic, i64 conductor)
    : sgp_(std::move(S)), sporadic_(std::move(sporadic)), conductor_(conductor) {
    normalize();
}

ValueIdeal ValueIdeal::ring(const NumericalSemigroup& S) { return ValueIdeal(S, {0}); }

ValueIdeal ValueIdeal::maximal_ideal(const NumericalSemigroup& S) {
    std::vector<i64> gens = S.generators();
    return ValueIdeal(S, std::move(gens));
}

ValueIdeal ValueIdeal::canonical(const NumericalSemigroup& S) {
    const i64 f = S.frobenius();
    std::vector<i64> sporadic;
    for (i64 x = 0; x <= f; ++x)
        if (!S.contains(f - x)) sporadic.push_back(x);
    ValueIdeal w(S, std::move(sporadic), f + 1);  // F - x < 0 for x > F
    assert(w.is_closed());
    return w;
}

bool ValueIdeal::contains(i64 x) const {
    if (x >= conductor_) return true;
    return std::binary_search(sporadic_.begin(), sporadic_.end(), x);
}

std::vector<i64> ValueIdeal::elements_upto(i64 bound) const {
    std::vector<i64> out;
    for (i64 v : sporadic_)
        if (v <= bound) out.push_back(v);
    for (i64 v = conductor_; v <= bound; ++v) out.push_back(v);
    return out;
}

ValueIdeal ValueIdeal::shifted(i64 a) const {
    std::vector<i64> sporadic = sporadic_;
    for (i64& v : sporadic) v += a;
    return ValueIdeal(sgp_, std::move(sporadic), conductor_ + a);
}

bool ValueIdeal::operator==(const ValueIdeal& o) const {
    return sgp_ == o.sgp_ && conductor_ == o.conductor_ && sporadic_ == o.sporadic_;
}

bool ValueIdeal::subset_of(const ValueIdeal& o) const {
    require_same(*this, o);
    const i64 hi = std::max(conductor_, o.conductor());
    for (i64 v : elements_upto(hi))
        if (!o.contains(v)) return false;
    return true;
}

bool ValueIdeal::is_closed() const {
    const i64 e = sgp_.multiplicity();
    for (i64 v : elements_upto(conductor_ + 2 * e))
        for (i64 g : sgp_.generators())
            if (!contains(v + g)) return false;
    return true;
}

std::string ValueIdeal::to_string() const {
    std::ostringstream os;
    os << '{';
    for (i64 v : sporadic_) os << v << ", ";
    os << conductor_ << "->}";
    return os.str();
}

ModuleSum::ModuleSum(std::vector<ValueIdeal> parts) : summands(std::move(parts)) {
    if (summands.empty()) throw std::invalid_argument("empty module sum");
    for (const auto& I : summands)
        if (I.semigroup() != summands.front().semigroup())
            throw std::invalid_argument("semigroup mismatch");
}

namespace {

// Append the segment [from, from + F] so the generated closure reproduces the
// whole tail [from, inf) exactly.
void push_tail(std::vector<i64>& values, i64 from, const NumericalSemigroup& S) {
    for (i64 x = from; x <= from + std::max<i64>(S.frobenius(), 0); ++x) values.push_back(x);
}

}  // namespace

ValueIdeal add(const ValueIdeal& I, const ValueIdeal& J) {
    require_same(I, J);
    std::vector<i64> values = I.sporadic();
    for (i64 v : J.sporadic()) values.push_back(v);
    push_tail(values, std::min(I.conductor(), J.conductor()), I.semigroup());
    // The union of two closed sets is closed, so the generated closure adds
    // nothing and the result is exactly the union.
    return ValueIdeal(I.semigroup(), std::move(values));
}

ValueIdeal multiply(const ValueIdeal& I, const ValueIdeal& J) {
    require_same(I, J);
    const i64 lo = I.min() + J.min();
    const i64 hi = I.conductor() + J.conductor();  // everything >= hi is a sum
    std::vector<i64> values;
    const auto ivals = I.elements_upto(hi - J.min());
    for (i64 x = lo; x < hi; ++x) {
        for (i64 i : ivals) {
            if (i > x - J.min()) break;
            if (J.contains(x - i)) {
                values.push_back(x);
                break;
            }
        }
    }
    push_tail(values, hi, I.semigroup());
    ValueIdeal out(I.semigroup(), values);
    // The sum set is already closed, so the closure must not have introduced
    // anything below the scanned window's end.
    assert(std::includes(values.begin(), values.end(), out.sporadic().begin(),
                         out.sporadic().end()));
    return out;
}

ValueIdeal colon(const ValueIdeal& I, const ValueIdeal& J) {
    require_same(I, J);
    const i64 lo = I.min() - J.min();        // below this, x + min(J) < min(I)
    const i64 hi = I.conductor() - J.min();  // from here on, x + J >= conductor(I)
    std::vector<i64> values;
    for (i64 x = lo; x < hi; ++x) {
        bool ok = true;
        // Only j with x + j < conductor(I) can fail.
        for (i64 j : J.elements_upto(I.conductor() - x - 1))
            if (!I.contains(x + j)) {
                ok = false;
                break;
            }
        if (ok) values.push_back(x);
    }
    push_tail(values, hi, I.semigroup());
    ValueIdeal out(I.semigroup(), values);
    assert(std::includes(values.begin(), values.end(), out.sporadic().begin(),
                         out.sporadic().end()));
    return out;
}

ValueIdeal trace(const ValueIdeal& I) {
    ValueIdeal t = multiply(I, colon(ValueIdeal::ring(I.semigroup()), I));
    assert(t.min() >= 0);  // the trace is an integral ideal
    return t;
}

ValueIdeal trace(const ModuleSum& M) {
    ValueIdeal t = trace(M.summands.front());
    for (size_t i = 1; i < M.summands.size(); ++i) t = add(t, trace(M.summands[i]));
    return t;
}

std::vector<i64> minimal_generators(const ValueIdeal& I) {
    const ValueIdeal mI = multiply(ValueIdeal::maximal_ideal(I.semigroup()), I);
    std::vector<i64> gens;
    for (i64 v : I.elements_upto(mI.conductor()))
        if (!mI.contains(v)) gens.push_back(v);
    return gens;
}

i64 mu(const ValueIdeal& I) { return static_cast<i64>(minimal_generators(I).size()); }

i64 mu(const ModuleSum& M) {
    i64 total = 0;
    for (const auto& I : M.summands) total += mu(I);
    return total;
}

bool is_ulrich(const ValueIdeal& I) { return mu(I) == I.semigroup().multiplicity(); }

bool is_ulrich(const ModuleSum& M) {
    return std::all_of(M.summands.begin(), M.summands.end(),
                       [](const ValueIdeal& I) { return is_ulrich(I); });
}

bool is_full_trace(const ValueIdeal& I) {
    return trace(I) == ValueIdeal::maximal_ideal(I.semigroup());
}

bool is_full_trace(const ModuleSum& M) {
    return trace(M) == ValueIdeal::maximal_ideal(M.semigroup());
}

ValueIdeal maximal_ideal_power(const NumericalSemigroup& S, i64 n) {
    if (n < 0) throw std::invalid_argument("negative power");
    ValueIdeal out = ValueIdeal::ring(S);
    const ValueIdeal m = ValueIdeal::maximal_ideal(S);
    for (i64 i = 0; i < n; ++i) out = multiply(out, m);
    return out;
}

std::optional<i64> isomorphism_shift(const ValueIdeal& I, const ValueIdeal& J) {
    require_same(I, J);
    const i64 a = J.min() - I.min();  // the only candidate
    if (I.shifted(a) == J) return a;
    return std::nullopt;
}

bool is_nearly_gorenstein(const NumericalSemigroup& S) {
    return ValueIdeal::maximal_ideal(S).subset_of(trace(ValueIdeal::canonical(S)));
}

NumericalSemigroup endomorphism_ring(const NumericalSemigroup& S) {
    const ValueIdeal m = ValueIdeal::maximal_ideal(S);
    const ValueIdeal E = colon(m, m);
    if (E.min() != 0) throw std::logic_error("not a ring");
    // closure under addition; sums at or above the conductor are free
    for (i64 a : E.elements_upto(E.conductor()))
        for (i64 b : E.elements_upto(E.conductor()))
            if (a + b < E.conductor() && !E.contains(a + b))
                throw std::logic_error("not a ring");
    std::vector<i64> gaps;
    for (i64 x = 1; x < E.conductor(); ++x)
        if (!E.contains(x)) gaps.push_back(x);
    return NumericalSemigroup::from_gaps(gaps);
}

EndoTrace trace_over_endomorphism_ring(const ModuleSum& M) {
    const NumericalSemigroup& S = M.semigroup();
    if (!S.has_minimal_multiplicity())
        throw std::invalid_argument("endomorphism trace requires minimal multiplicity");
    if (!is_ulrich(M)) throw std::invalid_argument("endomorphism trace requires Ulrich summands");

    NumericalSemigroup E = endomorphism_ring(S);
    std::optional<ValueIdeal> total;
    for (const auto& I : M.summands) {
        // An Ulrich ideal is a module over E = (m : m); re-read its value set
        // over E and trace there.  The tail segment is passed explicitly up
        // to where E's own tail regenerates it, so the re-read set equals I
        // exactly whenever I is E-closed.
        std::vector<i64> values = I.sporadic();
        const i64 tail_end = I.conductor() + std::max<i64>(E.frobenius(), 0) + 1;
        for (i64 x = I.conductor(); x <= tail_end; ++x) values.push_back(x);
        ValueIdeal over_e(E, std::move(values));
        // re-reading must not enlarge the element set
        if (over_e.sporadic() != I.sporadic() || over_e.conductor() != I.conductor())
            throw std::logic_error("summand is not a module over the endomorphism ring");
        ValueIdeal t = trace(over_e);
        total = total ? add(*total, t) : t;
    }
    return EndoTrace{std::move(E), std::move(*total)};
}

std::vector<ValueIdeal> enumerate_normalized_ideals(const NumericalSemigroup& S) {
    const auto& gaps = S.gaps();
    if (gaps.size() > 20) throw std::invalid_argument("gap bound exceeded");
    std::vector<ValueIdeal> out;
    const size_t n = gaps.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        auto in_set = [&](i64 x) {
            if (x < 0) return false;
            if (S.contains(x)) return true;
            for (size_t i = 0; i < n; ++i)
                if (gaps[i] == x) return ((mask >> i) & 1u) != 0;
            return true;  // beyond the Frobenius number
        };
        bool closed = true;
        for (size_t i = 0; closed && i < n; ++i) {
            if (!((mask >> i) & 1u)) continue;
            for (i64 g : S.generators())
                if (!in_set(gaps[i] + g)) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        std::vector<i64> values{0};
        for (size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) values.push_back(gaps[i]);
        out.emplace_back(S, std::move(values));
    }
    std::sort(out.begin(), out.end(), [](const ValueIdeal& a, const ValueIdeal& b) {
        if (a.sporadic() != b.sporadic()) return a.sporadic() < b.sporadic();
        return a.conductor() < b.conductor();
    });
    return out;
}

}  // namespace tracelab
