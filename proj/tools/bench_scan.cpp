// Benchmark: serial vs OpenMP truth-table scan on a wide formula.

#include <chrono>
#include <iostream>
#include <string>

#include "di9/classical.hpp"
#include "di9/formula.hpp"

int main(int argc, char** argv) {
  const int atom_count = argc > 1 ? std::stoi(argv[1]) : 20;

  // (p1 <-> p2) | (p2 <-> p3) | ... — a non-trivial scan over all 2^n rows.
  std::string text;
  for (int i = 1; i < atom_count; ++i) {
    if (!text.empty()) text += " | ";
    text += "(p" + std::to_string(i) + " <-> p" + std::to_string(i + 1) + ")";
  }
  const di9::FormulaPtr f = di9::parse_formula(text);

  const auto time = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const bool result = fn();
    const auto stop = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return std::pair{result, ms};
  };

  const auto [serial_result, serial_ms] =
      time([&] { return di9::is_tautology_serial(f, atom_count); });
  const auto [parallel_result, parallel_ms] =
      time([&] { return di9::is_tautology(f, atom_count); });

  std::cout << "atoms " << atom_count << " rows " << (1ull << atom_count) << "\n";
  std::cout << "serial   " << serial_ms << " ms result " << serial_result << "\n";
  std::cout << "parallel " << parallel_ms << " ms result " << parallel_result << "\n";
  if (serial_result != parallel_result) {
    std::cerr << "MISMATCH between serial and parallel scans\n";
    return 1;
  }
  return 0;
}
