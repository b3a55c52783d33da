#include "spinpair/errors.hpp"

#include <sstream>

namespace spinpair {

namespace {

std::string mid_shell_message(int requested, int below, int above) {
  std::ostringstream os;
  os << "electron count " << requested
     << " would partially fill a degenerate shell; nearest valid counts:";
  if (below >= 0) os << " " << below;
  if (above >= 0) os << (below >= 0 ? "," : "") << " " << above;
  return os.str();
}

std::string with_value(const char* prefix, double value) {
  std::ostringstream os;
  os.precision(6);
  os << prefix << value;
  return os.str();
}

}  // namespace

MidShellError::MidShellError(int requested, int below, int above)
    : Error(mid_shell_message(requested, below, above)),
      requested_(requested),
      below_(below),
      above_(above) {}

TooFewElectrons::TooFewElectrons(int count)
    : Error("at least 2 electrons are required, got " + std::to_string(count)),
      count_(count) {}

VanishingTrace::VanishingTrace(double raw_trace, double threshold)
    : Error(with_value("two-particle trace vanishes: ", raw_trace) +
            with_value(" <= ", threshold)),
      raw_trace_(raw_trace) {}

SiteOutOfRange::SiteOutOfRange(int site, int num_sites)
    : Error("site " + std::to_string(site) + " outside [0, " +
            std::to_string(num_sites) + ")") {}

NotHermitian::NotHermitian(double defect)
    : ValidationError(with_value("matrix is not Hermitian, defect ", defect),
                      defect) {}

TraceNotOne::TraceNotOne(double defect)
    : ValidationError(with_value("trace differs from 1 by ", defect), defect) {}

NotPSD::NotPSD(double min_eigenvalue)
    : ValidationError(with_value("negative eigenvalue ", min_eigenvalue),
                      min_eigenvalue) {}

IntractableSize::IntractableSize(int sites, int electrons)
    : Error("oracle limited to M <= 8 and 2 <= N <= 4, got M=" +
            std::to_string(sites) + " N=" + std::to_string(electrons)) {}

}  // namespace spinpair
