#ifndef BSIMPLEX_SAMPLE_SET_HPP_
#define BSIMPLEX_SAMPLE_SET_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bsimplex {

enum class Domain { kSimplex, kHypercube };

const char* to_string(Domain domain);

// n observations of dimension d stored row-major. Immutable once built; every
// point is checked against its domain with tolerance 1e-12. Duplicates are
// kept (multiset semantics).
class SampleSet {
 public:
  SampleSet(std::size_t dim, std::vector<double> flat, Domain domain,
            std::string provenance = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
  bool empty() const { return flat_.empty(); }
  Domain domain() const { return domain_; }
  const std::string& provenance() const { return provenance_; }

  std::span<const double> point(std::size_t j) const {
    return std::span<const double>(flat_).subspan(j * dim_, dim_);
  }
  const std::vector<double>& flat() const { return flat_; }

  // Same points under another domain tag; revalidated.
  SampleSet with_domain(Domain domain) const;

 private:
  std::size_t dim_;
  std::vector<double> flat_;
  Domain domain_;
  std::string provenance_;
};

// CSV layout: header "x1,...,xd", one row per observation, 17 significant
// digits.
void write_sample_csv(std::ostream& out, const SampleSet& samples);
std::string sample_csv(const SampleSet& samples);

// Parses the layout above. Throws DomainError on malformed content or points
// outside the requested domain.
SampleSet read_sample_csv(std::istream& in, Domain domain, std::string provenance = {});

}  // namespace bsimplex

#endif  // BSIMPLEX_SAMPLE_SET_HPP_
