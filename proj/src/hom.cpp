#include "brace/hom.hpp"

#include <numeric>
#include <sstream>

namespace brace {

std::string SampleSpec::describe() const
{
    std::ostringstream os;
    os << "range=[-" << range << "," << range << "] coeff_bound=" << coeff_bound << " max_terms=" << max_terms
       << " random_extra=" << random_extra << " seed=" << seed;
    return os.str();
}

std::vector<Index> FiniteDomain::sample(const SampleSpec&) const
{
    std::vector<Index> all(brace->order());
    std::iota(all.begin(), all.end(), Index{0});
    return all;
}

BraceHom<FiniteDomain> identity_hom(std::shared_ptr<const FiniteBrace> brace)
{
    std::vector<Index> all(brace->order());
    std::iota(all.begin(), all.end(), Index{0});
    FiniteDomain domain{brace};
    return BraceHom<FiniteDomain>(domain, brace, all, all, [](Index x) { return x; });
}

} // namespace brace
