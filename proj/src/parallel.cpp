#include "qmatball/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qmatball {

int thread_count() {
    if (const char* env = std::getenv("QMATBALL_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace qmatball
