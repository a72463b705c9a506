#include "sq/parallel.hpp"

namespace sq {

int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? static_cast<int>(n) : 1;
}

}  // namespace sq
