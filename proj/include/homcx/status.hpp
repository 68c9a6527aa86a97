#pragma once
// Certification statuses attached to every potentially-unbounded
// computation. EXACT means the total space was finite and fully
// enumerated; WINDOWED means valid for degrees up to the window only;
// STABILIZED means no new generators appeared in the top `guard` degrees
// of the window (empirically complete, not a proof).

#include <cstdint>
#include <string>

namespace homcx {

enum class Cert { exact, windowed, stabilized };

struct CompStatus {
    Cert kind = Cert::exact;
    std::int32_t window = -1;   // highest degree inspected (windowed/stabilized)
    std::int32_t last_event = -1; // last degree where a generator appeared
    std::int32_t guard = 0;

    static CompStatus exact() { return CompStatus{}; }
    static CompStatus windowed(std::int32_t w, std::int32_t last = -1) {
        return CompStatus{Cert::windowed, w, last, 0};
    }
    static CompStatus stabilized(std::int32_t w, std::int32_t last, std::int32_t guard) {
        return CompStatus{Cert::stabilized, w, last, guard};
    }

    bool is_exact() const { return kind == Cert::exact; }

    // weakest of two statuses, used when results combine
    CompStatus merge(const CompStatus& o) const {
        auto sev = [](Cert c) { return c == Cert::exact ? 0 : c == Cert::stabilized ? 1 : 2; };
        const CompStatus& weak = sev(kind) >= sev(o.kind) ? *this : o;
        CompStatus out = weak;
        if (kind != Cert::exact && o.kind != Cert::exact)
            out.window = std::min(window, o.window);
        return out;
    }

    std::string str() const {
        switch (kind) {
            case Cert::exact: return "EXACT";
            case Cert::windowed: return "WINDOWED(" + std::to_string(window) + ")";
            case Cert::stabilized:
                return "STABILIZED(" + std::to_string(last_event) + ",guard=" + std::to_string(guard) + ")";
        }
        return "?";
    }
};

} // namespace homcx
