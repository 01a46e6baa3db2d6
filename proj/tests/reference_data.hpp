// Reference data for the canonical a(1) = 7 run, transcribed from the OEIS
// prefixes this project reproduces (A132199 differences, A137613 shortcut
// primes) and the associated per-index table of Delta/g/a/ratio values.
#pragma once

#include <cstdint>
#include <vector>
#include <string>

namespace refdata {

// First 495 terms of the difference sequence g(n), n >= 2, for seed (1, 7).
inline const std::vector<std::uint64_t> kDifferencePrefix = {
    1, 1, 1, 5, 3, 1, 1, 1, 1, 11, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 23, 3, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 47, 3, 1, 5, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 101, 3, 1, 1, 7, 1, 1, 1, 1, 11, 3, 1, 1, 1, 1, 1, 13, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 233, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 467, 3, 1, 5, 3, 1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

// First 200 nontrivial gcd values (shortcut events) for seed (1, 7).
inline const std::vector<std::uint64_t> kEventPrefix = {
    5, 3, 11, 3, 23, 3, 47, 3, 5, 3, 101, 3, 7, 11, 3, 13, 233, 3, 467, 3, 5, 3, 941, 3, 7, 1889, 3,
    3779, 3, 7559, 3, 13, 15131, 3, 53, 3, 7, 30323, 3, 60647, 3, 5, 3, 101, 3, 121403, 3, 242807,
    3, 5, 3, 19, 7, 5, 3, 47, 3, 37, 5, 3, 17, 3, 199, 53, 3, 29, 3, 486041, 3, 7, 421, 23, 3,
    972533, 3, 577, 7, 1945649, 3, 163, 7, 3891467, 3, 5, 3, 127, 443, 3, 31, 7783541, 3, 7,
    15567089, 3, 19, 29, 3, 5323, 7, 5, 3, 31139561, 3, 41, 3, 5, 3, 62279171, 3, 7, 83, 3, 19, 29,
    3, 1103, 3, 5, 3, 13, 7, 124559609, 3, 107, 3, 911, 3, 249120239, 3, 11, 3, 7, 61, 37, 179, 3,
    31, 19051, 7, 3793, 23, 3, 5, 3, 6257, 3, 43, 11, 3, 13, 5, 3, 739, 37, 5, 3, 498270791, 3, 19,
    11, 3, 41, 3, 5, 3, 996541661, 3, 7, 37, 5, 3, 67, 1993083437, 3, 5, 3, 83, 3, 5, 3, 73, 157, 7,
    5, 3, 13, 3986167223, 3, 7, 73, 5, 3, 7, 37, 7, 11, 3, 13, 17, 3};

// Reference rows (n, Delta(n), g(n), a(n), ratio rendered to 6 significant
// digits). Delta and g are -1 on the seed row where they are undefined.
struct TableRow {
  std::uint64_t n;
  std::int64_t delta;
  std::int64_t g;
  std::uint64_t a;
  const char* ratio;
};
inline const std::vector<TableRow> kTableRows = {
    {1, -1, -1, 7, "7"},
    {2, 5, 1, 8, "4"},
    {3, 5, 1, 9, "3"},
    {4, 5, 1, 10, "2.5"},
    {5, 5, 5, 15, "3"},
    {6, 9, 3, 18, "3"},
    {7, 11, 1, 19, "2.71429"},
    {8, 11, 1, 20, "2.5"},
    {9, 11, 1, 21, "2.33333"},
    {10, 11, 1, 22, "2.2"},
    {11, 11, 11, 33, "3"},
    {12, 21, 3, 36, "3"},
    {13, 23, 1, 37, "2.84615"},
    {14, 23, 1, 38, "2.71429"},
    {15, 23, 1, 39, "2.6"},
    {16, 23, 1, 40, "2.5"},
    {17, 23, 1, 41, "2.41176"},
    {18, 23, 1, 42, "2.33333"},
    {19, 23, 1, 43, "2.26316"},
    {20, 23, 1, 44, "2.2"},
    {21, 23, 1, 45, "2.14286"},
    {22, 23, 1, 46, "2.09091"},
    {23, 23, 23, 69, "3"},
    {24, 45, 3, 72, "3"},
    {25, 47, 1, 73, "2.92"},
    {26, 47, 1, 74, "2.84615"},
    {27, 47, 1, 75, "2.77778"},
    {28, 47, 1, 76, "2.71429"},
    {29, 47, 1, 77, "2.65517"},
    {30, 47, 1, 78, "2.6"},
    {31, 47, 1, 79, "2.54839"},
    {32, 47, 1, 80, "2.5"},
    {33, 47, 1, 81, "2.45455"},
    {34, 47, 1, 82, "2.41176"},
    {35, 47, 1, 83, "2.37143"},
    {36, 47, 1, 84, "2.33333"},
    {37, 47, 1, 85, "2.2973"},
    {38, 47, 1, 86, "2.26316"},
    {39, 47, 1, 87, "2.23077"},
    {40, 47, 1, 88, "2.2"},
    {41, 47, 1, 89, "2.17073"},
    {42, 47, 1, 90, "2.14286"},
    {43, 47, 1, 91, "2.11628"},
    {44, 47, 1, 92, "2.09091"},
    {45, 47, 1, 93, "2.06667"},
    {46, 47, 1, 94, "2.04348"},
    {47, 47, 47, 141, "3"},
    {48, 93, 3, 144, "3"},
    {49, 95, 1, 145, "2.95918"},
    {50, 95, 5, 150, "3"},
    {51, 99, 3, 153, "3"},
    {52, 101, 1, 154, "2.96154"},
    {53, 101, 1, 155, "2.92453"},
    {54, 101, 1, 156, "2.88889"},
    {99, 101, 1, 201, "2.0303"},
    {100, 101, 1, 202, "2.02"},
    {101, 101, 101, 303, "3"},
    {102, 201, 3, 306, "3"},
    {103, 203, 1, 307, "2.98058"},
    {104, 203, 1, 308, "2.96154"},
    {105, 203, 7, 315, "3"},
    {106, 209, 1, 316, "2.98113"},
};

}  // namespace refdata
