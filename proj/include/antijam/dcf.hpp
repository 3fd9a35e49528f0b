#pragma once

#include "antijam/errors.hpp"
#include "antijam/rng.hpp"

#include <algorithm>
#include <cstdint>

namespace antijam {

// Simplified 802.11 DCF baseline: slotted binary exponential backoff, no
// SIFS/DIFS/RTS/CTS framing. Defaults are the 802.11a DCF values.
struct DcfParams {
    std::int64_t cw_min = 15;
    std::int64_t cw_max = 1023;

    void validate() const {
        if (cw_min < 1) {
            throw ConfigError("cw_min must be >= 1");
        }
        if (cw_max < cw_min) {
            throw ConfigError("cw_max must be >= cw_min");
        }
    }

    bool operator==(const DcfParams&) const = default;
};

struct DcfNodeState {
    std::int64_t cw = 15;
    std::int64_t backoff = 0;

    bool operator==(const DcfNodeState&) const = default;
};

// What one DCF node experienced this slot. MySuccess/MyFailure apply only to
// nodes that transmitted; a transmission fails whenever the slot outcome was
// not Success (collision or jam; the jam destroys the frame).
enum class DcfSlotEvent : std::uint8_t { IdleObserved, BusyObserved, MySuccess, MyFailure };

inline DcfNodeState dcf_initial(const DcfParams& params, RngStream& rng) noexcept {
    DcfNodeState s;
    s.cw = params.cw_min;
    s.backoff = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(s.cw + 1)));
    return s;
}

inline bool dcf_decide(const DcfNodeState& s) noexcept {
    return s.backoff == 0;
}

inline DcfNodeState dcf_update(DcfNodeState s, const DcfParams& params, DcfSlotEvent ev,
                               RngStream& rng) noexcept {
    switch (ev) {
    case DcfSlotEvent::IdleObserved:
        if (s.backoff > 0) {
            s.backoff -= 1;
        }
        break;
    case DcfSlotEvent::BusyObserved:
        break; // backoff freezes while the channel is occupied
    case DcfSlotEvent::MySuccess:
        s.cw = params.cw_min;
        s.backoff = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(s.cw + 1)));
        break;
    case DcfSlotEvent::MyFailure:
        s.cw = std::min(2 * s.cw + 1, params.cw_max);
        s.backoff = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(s.cw + 1)));
        break;
    }
    return s;
}

} // namespace antijam
