#include "brace/free_c.hpp"

#include <random>
#include <sstream>

#include "brace/axioms.hpp"
#include "brace/error.hpp"

namespace brace {

namespace {

// a + sign * b as a merge of two sorted coefficient lists.
void merge_into(FreeCElement::Coeffs& a, const FreeCElement::Coeffs& b, int sign)
{
    FreeCElement::Coeffs::sequence_type out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.emplace_back(std::move(*i++));
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : Int(-j->second));
            ++j;
        } else {
            Int v = std::move(i->second);
            if (sign > 0)
                add_into(v, j->second);
            else
                sub_into(v, j->second);
            if (!v.is_zero())
                out.emplace_back(std::move(i->first), std::move(v));
            ++i;
            ++j;
        }
    }
    a.adopt_sequence(boost::container::ordered_unique_range, std::move(out));
}

} // namespace

FreeCElement::FreeCElement(Coeffs coeffs) : coeffs_(std::move(coeffs))
{
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

FreeCElement FreeCElement::basis(const Int& i) { return FreeCElement(Coeffs{{i, Int(1)}}); }

Int FreeCElement::coeff(const Int& i) const
{
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Int(0) : it->second;
}

FreeCElement FreeCElement::shifted(const Int& t) const
{
    if (t == 0)
        return *this;
    Coeffs::sequence_type moved;
    moved.reserve(coeffs_.size());
    for (const auto& [i, v] : coeffs_)
        moved.emplace_back(i + t, v);
    FreeCElement out;
    out.coeffs_.adopt_sequence(boost::container::ordered_unique_range, std::move(moved));
    return out;
}

FreeCElement& FreeCElement::operator+=(const FreeCElement& other)
{
    merge_into(coeffs_, other.coeffs_, 1);
    return *this;
}

FreeCElement& FreeCElement::operator-=(const FreeCElement& other)
{
    merge_into(coeffs_, other.coeffs_, -1);
    return *this;
}

FreeCElement FreeCElement::operator-() const
{
    FreeCElement out = *this;
    for (auto& [i, v] : out.coeffs_)
        v = -v;
    return out;
}

FreeCElement operator*(const Int& n, const FreeCElement& x)
{
    if (n == 0)
        return {};
    FreeCElement out = x;
    for (auto& [i, v] : out.coeffs_)
        v *= n;
    return out;
}

std::string FreeCElement::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : coeffs_) {
        if (!first)
            os << (v < 0 ? " - " : " + ");
        else if (v < 0)
            os << "-";
        first = false;
        const Int mag = v < 0 ? Int(-v) : v;
        if (mag != 1)
            os << mag;
        os << "c_" << i;
    }
    return os.str();
}

Int weight(const FreeCElement& x)
{
    Int total = 0;
    for (const auto& [i, v] : x.coeffs())
        total += v;
    return total;
}

FreeCElement lambda_c(const FreeCElement& x, const FreeCElement& y) { return y.shifted(weight(x)); }

FreeCElement mul_c(const FreeCElement& x, const FreeCElement& y) { return x + lambda_c(x, y); }

FreeCElement star_c(const FreeCElement& x, const FreeCElement& y) { return lambda_c(x, y) - y; }

FreeCElement inv_c(const FreeCElement& x) { return -x.shifted(-weight(x)); }

FreeCElement power_c(const FreeCElement& x, const Int& n)
{
    const FreeCElement base = n < 0 ? inv_c(x) : x;
    FreeCElement acc;
    for (Int k = n < 0 ? Int(-n) : n; k > 0; --k)
        acc = mul_c(acc, base);
    return acc;
}

FreeCElement s_sequence(std::int64_t j)
{
    if (j < 1)
        throw Error(ErrorCode::InvalidArgument, "s_j needs j >= 1, got " + std::to_string(j));
    const auto a = FreeCElement::basis(0);
    FreeCElement s = a;
    for (std::int64_t step = 2; step <= j; ++step)
        s = star_c(a, s);
    return s;
}

FreeCElement s_closed_form(std::int64_t j)
{
    if (j < 1)
        throw Error(ErrorCode::InvalidArgument, "s_j needs j >= 1, got " + std::to_string(j));
    FreeCElement::Coeffs terms;
    for (std::int64_t k = 0; k <= j - 1; ++k)
        terms[Int(j - k - 1)] = sign_power(k) * binom(j - 1, k);
    return FreeCElement(std::move(terms));
}

bool is_in_D(const FreeCElement& x) { return weight(x) == 0; }

std::vector<std::pair<Int, Int>> express_in_star_generators(const FreeCElement& x)
{
    if (!is_in_D(x))
        throw Error(ErrorCode::InvalidArgument, "element " + x.to_string() + " has nonzero weight " + weight(x).str());
    std::vector<std::pair<Int, Int>> out;
    for (const auto& [i, v] : x.coeffs())
        if (i != 0)
            out.emplace_back(i, v);
    return out;
}

FreeCElement from_star_generators(const std::vector<std::pair<Int, Int>>& terms)
{
    const auto a = FreeCElement::basis(0);
    FreeCElement out;
    for (const auto& [i, v] : terms)
        out += v * star_c(power_c(a, i), a);
    return out;
}

std::vector<FreeCElement> FreeCDomain::sample(const SampleSpec& spec) const
{
    std::vector<FreeCElement> out;
    const std::int64_t lo = -spec.range;
    const std::int64_t width = 2 * spec.range + 1;
    std::vector<std::int64_t> coeff_values;
    for (std::int64_t c = -spec.coeff_bound; c <= spec.coeff_bound; ++c)
        if (c != 0)
            coeff_values.push_back(c);

    // Elements with at most max_terms terms, indices strictly increasing.
    FreeCElement::Coeffs current;
    auto extend = [&](auto& self, std::int64_t next_index, std::size_t terms) -> void {
        out.emplace_back(current);
        if (terms == spec.max_terms)
            return;
        for (std::int64_t i = next_index; i < lo + width; ++i)
            for (std::int64_t c : coeff_values) {
                current[Int(i)] = c;
                self(self, i + 1, terms + 1);
                current.erase(Int(i));
            }
    };
    extend(extend, lo, 0);

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::int64_t> coeff(-spec.coeff_bound, spec.coeff_bound);
    for (std::size_t r = 0; r < spec.random_extra; ++r) {
        FreeCElement::Coeffs dense;
        for (std::int64_t i = lo; i < lo + width; ++i)
            dense[Int(i)] = coeff(rng);
        out.emplace_back(std::move(dense));
    }
    return out;
}

BraceHom<FreeCDomain> hom_from_C(std::shared_ptr<const FiniteBrace> target, Index b)
{
    target->check_index(b);
    const auto conditions = check_rn2_conditions(*target);
    if (!conditions.holds[0])
        throw Error(ErrorCode::PreconditionFailed, "target brace does not satisfy A^(3) = {0}");

    // b_i = lambda_{b^i}(b) depends on i only modulo the multiplicative order of b.
    std::vector<Index> translates;
    Index power = 0;
    do {
        translates.push_back(target->lambda(power, b));
        power = target->mul(power, b);
    } while (power != 0);
    const auto period = static_cast<std::int64_t>(translates.size());

    std::vector<std::vector<Index>> cycles;
    for (Index t : translates)
        cycles.push_back(target->multiples(t));
    auto map = [target, cycles, period](const FreeCElement& x) {
        Index acc = 0;
        for (const auto& [i, v] : x.coeffs()) {
            const auto& cycle = cycles[static_cast<std::size_t>(mod_floor(i, period))];
            acc = target->add(acc, cycle[static_cast<std::size_t>(
                                       mod_floor(v, static_cast<std::int64_t>(cycle.size())))]);
        }
        return acc;
    };

    // Any homomorphism with c_0 -> b sends c_i = lambda_{c_0^i}(c_0) to
    // lambda_{b^i}(b); both sides are computed from their own brace.
    std::vector<std::pair<FreeCElement, Index>> forced;
    const auto c0 = FreeCElement::basis(0);
    for (std::int64_t i = -period - 1; i <= period + 1; ++i)
        forced.emplace_back(lambda_c(power_c(c0, i), c0), target->lambda(target->power(b, i), b));

    return BraceHom<FreeCDomain>(FreeCDomain{}, std::move(target), {c0}, {b}, std::move(map), std::move(forced));
}

} // namespace brace
