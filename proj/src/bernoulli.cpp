#include <array>
#include <stdexcept>
#include <string>

#include "floorsum/asymptotics.hpp"

namespace floorsum {

namespace {

constexpr std::array<BernoulliRational, kExactBernoulliCount> kExact = {{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
}};

// B_2 .. B_60, each the double nearest the exact rational.
constexpr std::array<double, kMaxBernoulliCount> kRounded = {
    0.16666666666666666,     -0.03333333333333333,     0.023809523809523808,
    -0.03333333333333333,    0.07575757575757576,      -0.2531135531135531,
    1.1666666666666667,      -7.092156862745098,       54.971177944862156,
    -529.1242424242424,      6192.123188405797,        -86580.25311355312,
    1425517.1666666667,      -27298231.067816094,      601580873.9006424,
    -15116315767.092157,     429614643061.1667,        -13711655205088.332,
    488332318973593.2,       -1.9296579341940068e+16,  8.416930475736826e+17,
    -4.0338071854059454e+19, 2.1150748638081993e+21,   -1.2086626522296526e+23,
    7.500866746076964e+24,   -5.038778101481069e+26,   3.6528776484818122e+28,
    -2.849876930245088e+30,  2.3865427499683627e+32,   -2.1399949257225335e+34,
};

}  // namespace

std::vector<double> bernoulli_numbers(int count) {
  if (count < 1 || count > kMaxBernoulliCount) {
    throw std::out_of_range("bernoulli_numbers: count must be in [1, 30], got " +
                            std::to_string(count));
  }
  return {kRounded.begin(), kRounded.begin() + count};
}

BernoulliRational bernoulli_rational(int k) {
  if (k < 1 || k > kExactBernoulliCount) {
    throw std::out_of_range("bernoulli_rational: k must be in [1, 12], got " + std::to_string(k));
  }
  return kExact[static_cast<std::size_t>(k - 1)];
}

}  // namespace floorsum
