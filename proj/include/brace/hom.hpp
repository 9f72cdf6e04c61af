#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "brace/finite_brace.hpp"
#include "brace/series.hpp"

namespace brace {

/// Region of a (possibly infinite) source brace on which a homomorphism is
/// checked. Finite sources ignore it and are checked exhaustively.
struct SampleSpec {
    /// Coordinates (B_m) or support indices (C) range over [-range, range].
    std::int64_t range = 0;
    /// C only: nonzero coefficients lie in [-coeff_bound, coeff_bound].
    std::int64_t coeff_bound = 1;
    /// C only: at most this many nonzero terms per sampled element.
    std::size_t max_terms = 2;
    /// Additional pseudo-random elements drawn inside the same bounds.
    std::size_t random_extra = 0;
    std::uint64_t seed = 1;

    std::string describe() const;
};

/// Source brace adapter used by BraceHom and verify_hom. left(x) returns an
/// object whose mul(y) and star(y) give xy and x*y; it may cache whatever
/// depends on x alone.
template <class D>
concept BraceDomain = requires(const D& d, const typename D::Element& x, const SampleSpec& spec) {
    { d.zero() } -> std::convertible_to<typename D::Element>;
    { d.add(x, x) } -> std::convertible_to<typename D::Element>;
    { d.left(x).mul(x) } -> std::convertible_to<typename D::Element>;
    { d.left(x).star(x) } -> std::convertible_to<typename D::Element>;
    { d.sample(spec) } -> std::convertible_to<std::vector<typename D::Element>>;
    { d.describe() } -> std::convertible_to<std::string>;
    { d.format(x) } -> std::convertible_to<std::string>;
};

/// A finite brace viewed as a homomorphism source.
struct FiniteDomain {
    using Element = Index;
    std::shared_ptr<const FiniteBrace> brace;

    struct Left {
        const FiniteBrace* brace;
        Index x;
        Index mul(Index y) const { return brace->mul(x, y); }
        Index star(Index y) const { return brace->star(x, y); }
    };

    Index zero() const { return 0; }
    Index add(Index a, Index b) const { return brace->add(a, b); }
    Left left(Index x) const { return {brace.get(), x}; }
    std::vector<Index> sample(const SampleSpec&) const;
    std::string describe() const { return "finite brace of order " + std::to_string(brace->order()); }
    std::string format(Index x) const { return std::to_string(x); }
};

/// A map from a source brace into a finite target brace, together with the
/// generators it is pinned on and the images those generators are forced to
/// have by any homomorphism with the same generator images.
template <BraceDomain D>
class BraceHom {
public:
    using Element = typename D::Element;
    using Map = std::function<Index(const Element&)>;

    BraceHom(D source, std::shared_ptr<const FiniteBrace> target, std::vector<Element> generators,
             std::vector<Index> generator_images, Map map,
             std::vector<std::pair<Element, Index>> forced_values = {})
        : source_(std::move(source)), target_(std::move(target)), generators_(std::move(generators)),
          generator_images_(std::move(generator_images)), map_(std::move(map)),
          forced_(std::move(forced_values))
    {
    }

    Index operator()(const Element& x) const { return map_(x); }

    const D& source() const noexcept { return source_; }
    const FiniteBrace& target() const noexcept { return *target_; }
    const std::vector<Element>& generators() const noexcept { return generators_; }
    const std::vector<Index>& generator_images() const noexcept { return generator_images_; }
    const std::vector<std::pair<Element, Index>>& forced_values() const noexcept { return forced_; }

    /// Copy with a different evaluation procedure (used to build corrupted maps).
    BraceHom with_map(Map map) const
    {
        BraceHom copy = *this;
        copy.map_ = std::move(map);
        return copy;
    }

private:
    D source_;
    std::shared_ptr<const FiniteBrace> target_;
    std::vector<Element> generators_;
    std::vector<Index> generator_images_;
    Map map_;
    std::vector<std::pair<Element, Index>> forced_;
};

struct HomWitness {
    std::string law;
    std::string x;
    std::string y;
    Index lhs = 0;
    Index rhs = 0;
};

struct HomReport {
    bool zero_ok = true;
    bool additive_ok = true;
    bool multiplicative_ok = true;
    bool star_ok = true;
    bool image_ok = true;
    bool uniqueness_ok = true;
    std::string source;
    std::string sample;
    std::size_t elements_sampled = 0;
    std::size_t pairs_checked = 0;
    std::vector<Index> image;
    std::vector<Index> expected_image;
    std::vector<HomWitness> witnesses;

    bool ok() const
    {
        return zero_ok && additive_ok && multiplicative_ok && star_ok && image_ok && uniqueness_ok;
    }
};

/// Checks h(x+y) = h(x)+h(y), h(xy) = h(x)h(y) and h(x*y) = h(x)*h(y) on
/// every pair of sampled elements, that the image (closed additively) equals
/// the subbrace generated by the generator images, and that h agrees with its
/// forced values. Only the first failing pair of each law is recorded.
template <BraceDomain D>
HomReport verify_hom(const BraceHom<D>& h, const SampleSpec& spec)
{
    const D& d = h.source();
    const FiniteBrace& t = h.target();
    HomReport report;
    report.source = d.describe();
    report.sample = spec.describe();

    const auto elems = d.sample(spec);
    report.elements_sampled = elems.size();
    std::vector<Index> images;
    images.reserve(elems.size());
    for (const auto& x : elems)
        images.push_back(h(x));

    if (h(d.zero()) != 0) {
        report.zero_ok = false;
        report.witnesses.push_back({"zero", d.format(d.zero()), "", h(d.zero()), 0});
    }

    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto left = d.left(elems[i]);
        for (std::size_t j = 0; j < elems.size(); ++j) {
            ++report.pairs_checked;
            const Index hx = images[i];
            const Index hy = images[j];
            const Index sum = h(d.add(elems[i], elems[j]));
            const Index prod = h(left.mul(elems[j]));
            const Index st = h(left.star(elems[j]));
            auto record = [&](bool& flag, const char* law, Index lhs, Index rhs) {
                if (lhs == rhs || !flag)
                    return;
                flag = false;
                report.witnesses.push_back({law, d.format(elems[i]), d.format(elems[j]), lhs, rhs});
            };
            record(report.additive_ok, "additive", sum, t.add(hx, hy));
            record(report.multiplicative_ok, "multiplicative", prod, t.mul(hx, hy));
            record(report.star_ok, "star", st, t.star(hx, hy));
        }
    }

    report.image = additive_closure(t, images).members();
    report.expected_image = subbrace_generated(t, h.generator_images()).members();
    report.image_ok = report.image == report.expected_image;
    if (!report.image_ok)
        report.witnesses.push_back({"image", "", "", static_cast<Index>(report.image.size()),
                                    static_cast<Index>(report.expected_image.size())});

    for (std::size_t g = 0; g < h.generators().size(); ++g)
        if (h(h.generators()[g]) != h.generator_images()[g] && report.uniqueness_ok) {
            report.uniqueness_ok = false;
            report.witnesses.push_back({"generator", d.format(h.generators()[g]), "", h(h.generators()[g]),
                                        h.generator_images()[g]});
        }
    for (const auto& [x, forced] : h.forced_values())
        if (h(x) != forced && report.uniqueness_ok) {
            report.uniqueness_ok = false;
            report.witnesses.push_back({"forced", d.format(x), "", h(x), forced});
        }
    return report;
}

/// The identity map of a finite brace, pinned on every element.
BraceHom<FiniteDomain> identity_hom(std::shared_ptr<const FiniteBrace> brace);

} // namespace brace
