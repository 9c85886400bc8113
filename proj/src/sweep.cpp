#include "auslander/sweep.hpp"

#include <cstdlib>

#include "auslander/oracle.hpp"

namespace auslander {

int thread_budget() {
    const char* env = std::getenv("AUSLANDER_THREADS");
    if (env) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

ExtTable ext_table(const std::vector<Representation>& mods, bool parallel) {
    int n = int(mods.size());
    ExtTable table;
    table.n = n;
    table.cells.resize(size_t(n) * n);
    parallel_for(n * n, parallel, [&](int k) { table.cells[k] = ext_dims(mods[k / n], mods[k % n]); });
    return table;
}

ExtTable ext_table_oracle(const std::vector<Representation>& mods, bool parallel) {
    int n = int(mods.size());
    ExtTable table;
    table.n = n;
    table.cells.resize(size_t(n) * n);
    parallel_for(n * n, parallel, [&](int k) { table.cells[k] = ext_dims_oracle(mods[k / n], mods[k % n]); });
    return table;
}

}  // namespace auslander
