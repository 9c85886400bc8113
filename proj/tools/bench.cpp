// Wall-clock comparison of the OpenMP sweeps against their serial reference.

#include <chrono>
#include <cstdio>
#include <functional>

#include "auslander/actions.hpp"
#include "auslander/oracle.hpp"
#include "auslander/sweep.hpp"
#include "auslander/thin.hpp"

using namespace auslander;

namespace {

double time_ms(const std::function<void()>& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", thread_budget());

    std::vector<Representation> bricks4;
    for (const ThinModule& m : enumerate_thin(4)) bricks4.push_back(thin_rep(m));

    ExtTable a, b;
    double s1 = time_ms([&] { a = ext_table(bricks4, false); });
    double p1 = time_ms([&] { b = ext_table(bricks4, true); });
    report("ext_table t=4 (26^2 pairs)", s1, p1);
    if (!(a == b)) std::printf("MISMATCH in ext_table\n");

    double s2 = time_ms([&] { a = ext_table_oracle(bricks4, false); });
    double p2 = time_ms([&] { b = ext_table_oracle(bricks4, true); });
    report("ext_table_oracle t=4", s2, p2);
    if (!(a == b)) std::printf("MISMATCH in ext_table_oracle\n");

    CayleyGraph g1, g2;
    double s3 = time_ms([&] { g1 = build_cayley_graph(7, ActionKind::Twist, false); });
    double p3 = time_ms([&] { g2 = build_cayley_graph(7, ActionKind::Twist, true); });
    report("cayley graph t=7 (5040)", s3, p3);
    if (g1.edges.size() != g2.edges.size()) std::printf("MISMATCH in cayley graph\n");

    std::vector<Representation> seq5;
    std::vector<WormDiagram> d5 = enumerate_diagrams(5);
    std::vector<char> ok(d5.size(), 0);
    double s4 = time_ms([&] {
        parallel_for(int(d5.size()), false, [&](int k) { ok[k] = verify_exceptional_sequence(diagram_to_sequence(d5[k])); });
    });
    double p4 = time_ms([&] {
        parallel_for(int(d5.size()), true, [&](int k) { ok[k] = verify_exceptional_sequence(diagram_to_sequence(d5[k])); });
    });
    report("sequence check t=5 (120)", s4, p4);
    return 0;
}
