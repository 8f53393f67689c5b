#include <sstream>

#include "qinj/oracle.hpp"

namespace qinj::oracle {

ProbeTrace window_convergence_probe(const QuiverDescription& q, const ProbeQuery& query,
                                    const std::vector<std::int64_t>& radii) {
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (radii[k] <= radii[k - 1]) throw std::invalid_argument("probe radii must increase strictly");
  }
  ProbeTrace trace;
  for (std::int64_t r : radii) {
    const ExplicitQuiver g = expand(q, r);
    mpz_class value;
    switch (query.kind) {
      case ProbeQuery::Kind::kPathCount:
        value = brute_paths(g, g.at(query.a), g.at(query.b)).size();
        break;
      case ProbeQuery::Kind::kPredecessors:
        value = brute_predecessors(g, g.at(query.a)).size();
        break;
      case ProbeQuery::Kind::kSuccessors:
        value = brute_successors(g, g.at(query.a)).size();
        break;
    }
    trace.radii.push_back(r);
    trace.values.push_back(value);
  }
  return trace;
}

bool ProbeTrace::constant_from(std::int64_t radius) const {
  std::optional<mpz_class> seen;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k] < radius) continue;
    if (seen && *seen != values[k]) return false;
    seen = values[k];
  }
  return seen.has_value();
}

bool ProbeTrace::grows_from(std::int64_t radius) const {
  std::size_t run = 0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k] < radius) continue;
    if (run > 0 && values[k] <= values[k - 1]) return false;
    ++run;
  }
  return run >= 3;
}

std::string ProbeTrace::describe() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    os << (k ? ", " : "") << radii[k] << ":" << values[k];
  }
  return os.str();
}

}  // namespace qinj::oracle
