/*
  OpenMP sweep kernels.  Every kernel takes a `parallel` flag; the serial
  path is the reference the parallel one is tested against.  AUSLANDER_THREADS
  caps the thread count (0 or unset = library default).
*/

#pragma once

#include <omp.h>

#include <exception>
#include <stdexcept>
#include <utility>
#include <vector>

#include "auslander/hom.hpp"

namespace auslander {

int thread_budget();

template <typename F>
void parallel_for(int n, bool parallel, F&& body) {
    if (!parallel) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    int threads = thread_budget();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

struct ExtTable {
    int n = 0;
    std::vector<ExtTriple> cells;  // row-major, cells[i*n + j] = ext(mods[i], mods[j])
    const ExtTriple& at(int i, int j) const { return cells[size_t(i) * n + j]; }
    bool operator==(const ExtTable& o) const { return n == o.n && cells == o.cells; }
};

// All ordered pairs through the hom complex.
ExtTable ext_table(const std::vector<Representation>& mods, bool parallel);
// Same pairs through the resolution oracle.
ExtTable ext_table_oracle(const std::vector<Representation>& mods, bool parallel);

}  // namespace auslander
