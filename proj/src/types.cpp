#include "iap/types.hpp"

#include <cmath>

namespace iap {

std::string to_string(Stage s) {
    switch (s) {
        case Stage::Osf: return "OSF";
        case Stage::Rcf: return "SIF-RCF";
        case Stage::Sif: return "SIF";
        case Stage::Fif: return "FIF";
        case Stage::Iap: return "IAP";
        case Stage::Reduced: return "REDUCED";
    }
    return "OSF";
}

Stage stage_from_string(const std::string& s) {
    if (s == "OSF") return Stage::Osf;
    if (s == "SIF-RCF") return Stage::Rcf;
    if (s == "SIF") return Stage::Sif;
    if (s == "FIF") return Stage::Fif;
    if (s == "IAP") return Stage::Iap;
    if (s == "REDUCED") return Stage::Reduced;
    throw ValidationError("unknown feature stage '" + s + "'");
}

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void HyperCube::validate() const {
    if (width < 1 || height < 1 || bands < 1)
        throw ValidationError("cube dimensions must be at least 1x1x1");
    if (data.size() != pixels() * static_cast<std::size_t>(bands))
        throw ValidationError("cube data length does not match W*H*D");
    if (!wavelengths.empty() && wavelengths.size() != static_cast<std::size_t>(bands))
        throw ValidationError("wavelength list length does not match band count");
    if (!all_finite(data)) throw NumericError("cube contains non-finite values");
}

}  // namespace iap
