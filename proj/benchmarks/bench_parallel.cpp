// Compares the serial reference enumerators against the OpenMP kernels and
// checks that both produce identical tables.

#include <chrono>
#include <iostream>

#include "tutte/oracle.hpp"

using namespace tutte;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timed(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 6;
    int m_max = argc > 2 ? std::atoi(argv[2]) : 4;

    oracle::FamilyTables serial_tables, parallel_tables;
    double ts = timed([&] {
        serial_tables = oracle::planar_count_tables(n_max, oracle::EnumMode::Serial);
    });
    double tp = timed([&] {
        parallel_tables =
            oracle::planar_count_tables(n_max, oracle::EnumMode::Parallel);
    });
    bool same = oracle::crosscheck(serial_tables, parallel_tables).ok;
    std::cout << "planar tables n<=" << n_max << ": serial " << ts << "s, openmp "
              << tp << "s, speedup " << (tp > 0 ? ts / tp : 0)
              << (same ? "" : "  MISMATCH") << "\n";

    oracle::MapCounts ms, mp;
    double us = timed([&] { ms = oracle::enum_rooted_maps(m_max, oracle::EnumMode::Serial); });
    double up = timed([&] { mp = oracle::enum_rooted_maps(m_max, oracle::EnumMode::Parallel); });
    bool msame = ms.rooted == mp.rooted && ms.pointed == mp.pointed;
    std::cout << "rotation systems m<=" << m_max << ": serial " << us << "s, openmp "
              << up << "s, speedup " << (up > 0 ? us / up : 0)
              << (msame ? "" : "  MISMATCH") << "\n";
    return same && msame ? 0 : 1;
}
