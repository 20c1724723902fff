#include "spectre/verify.hpp"

#include <ostream>

namespace spectre {

bool VerifyReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

void VerifyReport::print(std::ostream& os) const {
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
    }
}

}  // namespace spectre
