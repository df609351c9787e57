#include "bsimplex/sample_set.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "bsimplex/csv.hpp"
#include "bsimplex/errors.hpp"

namespace bsimplex {

namespace {

constexpr double kDomainTolerance = 1e-12;

void check_point(std::span<const double> p, Domain domain, std::size_t row) {
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -kDomainTolerance) {
      throw DomainError("sample " + std::to_string(row) + " has a negative or non-finite coordinate");
    }
    if (domain == Domain::kHypercube && v > 1.0 + kDomainTolerance) {
      throw DomainError("sample " + std::to_string(row) + " lies outside the unit hypercube");
    }
    total += v;
  }
  if (domain == Domain::kSimplex && total > 1.0 + kDomainTolerance) {
    throw DomainError("sample " + std::to_string(row) + " lies outside the simplex");
  }
}

}  // namespace

const char* to_string(Domain domain) {
  return domain == Domain::kSimplex ? "simplex" : "hypercube";
}

SampleSet::SampleSet(std::size_t dim, std::vector<double> flat, Domain domain,
                     std::string provenance)
    : dim_(dim), flat_(std::move(flat)), domain_(domain), provenance_(std::move(provenance)) {
  if (dim_ == 0) throw DomainError("SampleSet: dimension must be at least 1");
  if (flat_.size() % dim_ != 0) {
    throw DimensionError("SampleSet: data length is not a multiple of the dimension");
  }
  for (std::size_t j = 0; j < size(); ++j) check_point(point(j), domain_, j);
}

SampleSet SampleSet::with_domain(Domain domain) const {
  return SampleSet(dim_, flat_, domain, provenance_);
}

void write_sample_csv(std::ostream& out, const SampleSet& samples) { out << sample_csv(samples); }

std::string sample_csv(const SampleSet& samples) {
  std::string text;
  std::vector<std::string> fields(samples.dim());
  for (std::size_t i = 0; i < samples.dim(); ++i) fields[i] = "x" + std::to_string(i + 1);
  text += csv_row(fields);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const auto p = samples.point(j);
    for (std::size_t i = 0; i < p.size(); ++i) fields[i] = format_double(p[i]);
    text += csv_row(fields);
  }
  return text;
}

SampleSet read_sample_csv(std::istream& in, Domain domain, std::string provenance) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("sample CSV: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::size_t dim = 0;
  {
    std::istringstream header(line);
    std::string name;
    while (std::getline(header, name, ',')) {
      if (name != "x" + std::to_string(dim + 1)) {
        throw DomainError("sample CSV: expected column x" + std::to_string(dim + 1) + ", got '" +
                          name + "'");
      }
      ++dim;
    }
  }
  if (dim == 0) throw DomainError("sample CSV: empty header");

  std::vector<double> flat;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(fields, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty()) {
        throw DomainError("sample CSV: row " + std::to_string(row + 1) + " has a non-numeric field");
      }
      flat.push_back(v);
      ++count;
    }
    if (count != dim) {
      throw DomainError("sample CSV: row " + std::to_string(row + 1) + " has " +
                        std::to_string(count) + " fields, expected " + std::to_string(dim));
    }
    ++row;
  }
  return SampleSet(dim, std::move(flat), domain, std::move(provenance));
}

}  // namespace bsimplex
