#include "qprime/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qprime {

unsigned resolve_workers(const ParallelConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("QPRIME_WORKERS")) {
        try {
            unsigned long v = std::stoul(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace qprime
