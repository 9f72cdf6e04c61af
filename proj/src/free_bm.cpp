#include "brace/free_bm.hpp"

#include <random>
#include <sstream>

#include "brace/axioms.hpp"
#include "brace/error.hpp"
#include "brace/series.hpp"

namespace brace {

BmElement::BmElement(Storage coords) : coords_(std::move(coords))
{
    if (coords_.size() < 2)
        throw Error(ErrorCode::InvalidArgument,
                    "B_m elements need m >= 2 coordinates, got " + std::to_string(coords_.size()));
}

BmElement BmElement::zero(std::size_t m) { return BmElement(Storage(m)); }

BmElement BmElement::unit(std::size_t m, std::size_t i)
{
    if (i < 1 || i > m)
        throw Error(ErrorCode::InvalidArgument, "unit vector index " + std::to_string(i) + " outside 1.."
                                                    + std::to_string(m));
    Storage c(m);
    c[i - 1] = 1;
    return BmElement(std::move(c));
}

bool BmElement::is_zero() const
{
    for (const auto& v : coords_)
        if (v != 0)
            return false;
    return true;
}

void require_same_rank(const BmElement& x, const BmElement& y)
{
    if (x.rank() != y.rank())
        throw Error(ErrorCode::RankMismatch, "rank mismatch: " + std::to_string(x.rank()) + " vs "
                                                 + std::to_string(y.rank()));
}

BmElement& BmElement::operator+=(const BmElement& other)
{
    require_same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        add_into(coords_[i], other.coords_[i]);
    return *this;
}

BmElement& BmElement::operator-=(const BmElement& other)
{
    require_same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        sub_into(coords_[i], other.coords_[i]);
    return *this;
}

BmElement BmElement::operator-() const
{
    BmElement out = *this;
    for (auto& v : out.coords_)
        v = -v;
    return out;
}

BmElement operator*(const Int& n, BmElement x)
{
    for (auto& v : x.coords_)
        v *= n;
    return x;
}

std::string BmElement::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i];
    os << ")";
    return os.str();
}

BmLeft::BmLeft(const BmElement& x) : x_(x), row_(binom_row(x.coord(1), x.rank())) {}

// With binom(n_1, 0) = 1, coordinate i of lambda_x(y) is y_i plus the
// sum below; mul adds x_i and star drops y_i.
BmElement BmLeft::combine(const BmElement& y, bool with_x, bool with_y) const
{
    require_same_rank(x_, y);
    const std::size_t m = y.rank();
    const auto& yc = y.coords();
    BmElement::Storage z(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Accumulate in one machine word while possible, then fall back.
        std::int64_t acc = 0, term = 0, factor = 0, product = 0;
        bool word = true;
        if (with_x)
            word = as_word(x_.coords()[i], acc);
        if (word && with_y)
            word = as_word(yc[i], term) && !__builtin_add_overflow(acc, term, &acc);
        for (std::size_t k = 1; word && k <= i; ++k)
            word = as_word(row_[k], factor) && as_word(yc[i - k], term) &&
                   !__builtin_mul_overflow(factor, term, &product) && !__builtin_add_overflow(acc, product, &acc);
        if (word) {
            z[i] = acc;
            continue;
        }
        if (with_x)
            z[i] = x_.coords()[i];
        if (with_y)
            z[i] += yc[i];
        for (std::size_t k = 1; k <= i; ++k)
            if (!row_[k].is_zero())
                z[i] += row_[k] * yc[i - k];
    }
    return BmElement(std::move(z));
}

BmElement BmLeft::lambda(const BmElement& y) const { return combine(y, false, true); }

BmElement BmLeft::mul(const BmElement& y) const { return combine(y, true, true); }

BmElement BmLeft::star(const BmElement& y) const { return combine(y, false, false); }

BmElement lambda_bm(const BmElement& x, const BmElement& y) { return BmLeft(x).lambda(y); }

BmElement mul_bm(const BmElement& x, const BmElement& y) { return BmLeft(x).mul(y); }

BmElement star_bm(const BmElement& x, const BmElement& y) { return BmLeft(x).star(y); }

BmElement inv_bm(const BmElement& x)
{
    const std::size_t m = x.rank();
    const auto row = binom_row(-x.coord(1), m);
    BmElement::Storage out(m);
    for (std::size_t j = 1; j <= m; ++j) {
        Int sum = 0;
        for (std::size_t k = 0; k <= j - 1; ++k)
            sum += row[k] * x.coord(j - k);
        out[j - 1] = -sum;
    }
    return BmElement(std::move(out));
}

BmElement power_bm(const BmElement& x, const Int& n)
{
    const BmLeft step(n < 0 ? inv_bm(x) : x);
    BmElement acc = BmElement::zero(x.rank());
    // x^{k+1} = x * x^k keeps the cached left factor fixed.
    for (Int k = n < 0 ? Int(-n) : n; k > 0; --k)
        acc = step.mul(acc);
    return acc;
}

std::vector<BmElement> star_powers(const BmElement& a)
{
    const BmLeft left(a);
    std::vector<BmElement> out{a};
    while (out.size() < a.rank())
        out.push_back(left.star(out.back()));
    return out;
}

BmElement star_power(const BmElement& a, std::size_t j)
{
    if (j < 1)
        throw Error(ErrorCode::InvalidArgument, "star powers are indexed from 1");
    if (j > a.rank())
        return BmElement::zero(a.rank());
    return star_powers(a)[j - 1];
}

BmElement na_star_aj(const Int& n, std::size_t j, const BmElement& a)
{
    const std::size_t m = a.rank();
    if (j < 1 || j > m)
        throw Error(ErrorCode::InvalidArgument, "j = " + std::to_string(j) + " outside 1.." + std::to_string(m));
    const auto powers = star_powers(a);
    const auto row = binom_row(n, m + 1);
    BmElement out = BmElement::zero(m);
    for (std::size_t k = 1; k + j <= m; ++k)
        out += row[k] * powers[k + j - 1];
    return out;
}

Filtration::Filtration(std::int64_t r, std::size_t m) : r_(r), m_(m)
{
    if (r < 1)
        throw Error(ErrorCode::InvalidArgument, "filtration index must be >= 1, got " + std::to_string(r));
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "B_m needs m >= 2, got " + std::to_string(m));
}

bool Filtration::contains(const BmElement& x) const
{
    if (x.rank() != m_)
        throw Error(ErrorCode::RankMismatch, "rank mismatch: " + std::to_string(x.rank()) + " vs "
                                                 + std::to_string(m_));
    if (is_zero_set())
        return x.is_zero();
    for (std::int64_t i = 1; i < r_; ++i)
        if (x.coord(static_cast<std::size_t>(i)) != 0)
            return false;
    return true;
}

std::vector<BmElement> Filtration::basis() const
{
    std::vector<BmElement> out;
    for (auto i = static_cast<std::size_t>(r_); i <= m_; ++i)
        out.push_back(BmElement::unit(m_, i));
    return out;
}

std::string Filtration::describe() const
{
    if (is_zero_set())
        return "{0}";
    if (r_ == 1)
        return "B_" + std::to_string(m_);
    return "coordinates 1.." + std::to_string(r_ - 1) + " vanish";
}

Filtration filtration(std::int64_t r, std::size_t m) { return Filtration(r, m); }

std::vector<BmElement> BmDomain::sample(const SampleSpec& spec) const
{
    std::vector<BmElement> out;
    std::vector<std::int64_t> digits(m, -spec.range);
    while (true) {
        out.emplace_back(BmElement::Storage(digits.begin(), digits.end()));
        std::size_t i = 0;
        while (i < m && digits[i] == spec.range)
            digits[i++] = -spec.range;
        if (i == m)
            break;
        ++digits[i];
    }
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::int64_t> coord(-spec.range, spec.range);
    for (std::size_t r = 0; r < spec.random_extra; ++r) {
        BmElement::Storage c(m);
        for (auto& v : c)
            v = coord(rng);
        out.emplace_back(std::move(c));
    }
    return out;
}

BraceHom<BmDomain> hom_from_Bm(std::shared_ptr<const FiniteBrace> target, Index a, std::size_t m)
{
    target->check_index(a);
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "B_m needs m >= 2, got " + std::to_string(m));
    const auto conditions = check_rn2_conditions(*target);
    if (!conditions.holds[0])
        throw Error(ErrorCode::PreconditionFailed, "target brace does not satisfy A^(3) = {0}");
    const auto left = left_series(*target);
    if (!left.back().is_trivial() || left.size() > m + 1)
        throw Error(ErrorCode::PreconditionFailed,
                    "target brace does not satisfy A^" + std::to_string(m + 1) + " = {0}");

    // a_1 = a, a_{k+1} = a * a_k in the target.
    std::vector<Index> powers{a};
    while (powers.size() < m)
        powers.push_back(target->star(a, powers.back()));

    std::vector<std::vector<Index>> cycles;
    for (Index p : powers)
        cycles.push_back(target->multiples(p));
    auto map = [target, cycles](const BmElement& x) {
        Index acc = 0;
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            const auto& cycle = cycles[k];
            if (cycle.size() > 1)
                acc = target->add(acc, cycle[static_cast<std::size_t>(
                                           mod_floor(x.coords()[k], static_cast<std::int64_t>(cycle.size())))]);
        }
        return acc;
    };

    std::vector<std::pair<BmElement, Index>> forced;
    const auto b_powers = star_powers(BmElement::generator(m));
    for (std::size_t k = 0; k < m; ++k)
        forced.emplace_back(b_powers[k], powers[k]);

    return BraceHom<BmDomain>(BmDomain{m}, std::move(target), {BmElement::generator(m)}, {a}, std::move(map),
                              std::move(forced));
}

} // namespace brace
