// Serial reference count against the OpenMP count, per structure kind.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fishburn/enumeration.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  using fishburn::StructureKind;
  const int seq_n = argc > 1 ? std::atoi(argv[1]) : 9;
  const int mat_n = argc > 2 ? std::atoi(argv[2]) : 9;
  const int jobs = argc > 3 ? std::atoi(argv[3]) : 0;

  std::printf("%-14s %3s %12s %10s %10s %8s\n", "kind", "n", "count", "serial_s", "parallel_s", "speedup");
  int status = 0;
  for (auto kind : {StructureKind::Cayley, StructureKind::Modasc, StructureKind::Ascseq, StructureKind::Matrix,
                    StructureKind::Cover, StructureKind::FishburnTree, StructureKind::Poset}) {
    const bool sequence = kind == StructureKind::Cayley || kind == StructureKind::Modasc || kind == StructureKind::Ascseq;
    const int n = sequence ? seq_n : mat_n;
    std::int64_t serial = 0;
    std::int64_t parallel = 0;
    const double ts = seconds([&] { serial = fishburn::count_serial(kind, n); });
    const double tp = seconds([&] { parallel = fishburn::count_parallel(kind, n, jobs); });
    std::printf("%-14s %3d %12lld %10.3f %10.3f %7.2fx%s\n", std::string(fishburn::kind_name(kind)).c_str(), n,
                static_cast<long long>(serial), ts, tp, tp > 0 ? ts / tp : 0.0, serial == parallel ? "" : "  MISMATCH");
    if (serial != parallel) status = 1;
  }
  return status;
}
