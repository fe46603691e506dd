#include "tdmono/sampling.hpp"

#include <stdexcept>

namespace tdmono {

const char* slot_code(SlotKind k) {
    switch (k) {
        case SlotKind::MixedBall: return "mb";
        case SlotKind::MixedSpectral: return "ms";
        case SlotKind::Pure: return "p";
        case SlotKind::MaxMixed: return "mm";
    }
    throw std::invalid_argument("slot_code: unknown slot kind");
}

SlotKind slot_from_code(const std::string& code) {
    if (code == "mb") return SlotKind::MixedBall;
    if (code == "ms") return SlotKind::MixedSpectral;
    if (code == "p") return SlotKind::Pure;
    if (code == "mm") return SlotKind::MaxMixed;
    throw std::invalid_argument("unknown slot code '" + code + "' (expected mb, ms, p or mm)");
}

}  // namespace tdmono
