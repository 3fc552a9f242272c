#pragma once

#include <array>

namespace octupolar {

/// Coefficients d0, d2, ..., d16 of the separatrix polynomial in alpha2^2, as functions of
/// (alpha0, beta3). Static transcription; checked by three independent identities in the tests.
inline std::array<double, 9> separatrix_coefficients(double a0, double b3) {
  auto pw = [](double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
  };
  return {
      // d0
      256.0 * pw(pw(a0, 2) + pw(b3, 2) + b3, 4) * (4.0 * pw(a0, 2) + 4.0 * pw(b3, 2) + 4.0 * b3 - 3.0) * pw(4.0 * pw(a0, 2) + pw(2.0 * b3 + 1.0, 2), 5),
      // d2
      -256.0 * pw(pw(a0, 2) + pw(b3, 2) + b3, 2) * pw(4.0 * pw(a0, 2) + pw(2.0 * b3 + 1.0, 2), 3) * (64.0 * pw(a0, 8) + 8.0 * pw(a0, 6) * (32.0 * pw(b3, 2) - 112.0 * b3 - 81.0) + 2.0 * pw(a0, 4) * (192.0 * pw(b3, 4) - 576.0 * pw(b3, 3) - 1356.0 * pw(b3, 2) - 78.0 * b3 + 245.0) + pw(a0, 2) * (256.0 * pw(b3, 6) + 384.0 * pw(b3, 5) - 408.0 * pw(b3, 4) - 136.0 * pw(b3, 3) + 764.0 * pw(b3, 2) + 215.0 * b3 - 62.0) + pw(2.0 * b3 + 1.0, 2) * (16.0 * pw(b3, 6) + 144.0 * pw(b3, 5) + 266.0 * pw(b3, 4) + 87.0 * pw(b3, 3) - 89.0 * pw(b3, 2) - 32.0 * b3 + 6.0)),
      // d4
      16.0 * (-32768.0 * pw(a0, 16) + 2048.0 * pw(a0, 14) * (241.0 * pw(b3, 2) - 284.0 * b3 - 83.0) + 256.0 * pw(a0, 12) * (9208.0 * pw(b3, 4) - 5384.0 * pw(b3, 3) + 6390.0 * pw(b3, 2) + 25496.0 * b3 + 8589.0) + 128.0 * pw(a0, 10) * (25680.0 * pw(b3, 6) - 32160.0 * pw(b3, 5) + 7368.0 * pw(b3, 4) + 257000.0 * pw(b3, 3) + 212292.0 * pw(b3, 2) + 23286.0 * b3 - 10209.0) + 80.0 * pw(a0, 8) * (8064.0 * pw(b3, 8) - 169344.0 * pw(b3, 7) - 304224.0 * pw(b3, 6) + 311872.0 * pw(b3, 5) + 774736.0 * pw(b3, 4) + 306928.0 * pw(b3, 3) - 61620.0 * pw(b3, 2) - 34824.0 * b3 + 1209.0) - 8.0 * pw(a0, 6) * (281856.0 * pw(b3, 10) + 2529280.0 * pw(b3, 9) + 6835200.0 * pw(b3, 8) + 6572800.0 * pw(b3, 7) + 316800.0 * pw(b3, 6) - 2303424.0 * pw(b3, 5) - 174400.0 * pw(b3, 4) + 593920.0 * pw(b3, 3) + 124725.0 * pw(b3, 2) - 2310.0 * b3 + 6019.0) - 2.0 * pw(a0, 4) * pw(2.0 * b3 + 1.0, 2) * (230144.0 * pw(b3, 10) + 1285120.0 * pw(b3, 9) + 3244032.0 * pw(b3, 8) + 4304128.0 * pw(b3, 7) + 2583584.0 * pw(b3, 6) + 28128.0 * pw(b3, 5) - 669240.0 * pw(b3, 4) - 261024.0 * pw(b3, 3) + 369.0 * pw(b3, 2) + 30952.0 * b3 - 3232.0) - 4.0 * pw(a0, 2) * pw(2.0 * b3 + 1.0, 4) * (5408.0 * pw(b3, 10) + 10240.0 * pw(b3, 9) - 22272.0 * pw(b3, 8) - 72224.0 * pw(b3, 7) - 83578.0 * pw(b3, 6) - 75384.0 * pw(b3, 5) - 40635.0 * pw(b3, 4) + 8889.0 * pw(b3, 3) + 10338.0 * pw(b3, 2) - 2444.0 * b3 - 184.0) + 2.0 * pw(b3 + 1.0, 2) * pw(2.0 * b3 + 1.0, 6) * (400.0 * pw(b3, 8) + 4000.0 * pw(b3, 7) + 15408.0 * pw(b3, 6) + 16240.0 * pw(b3, 5) - 2449.0 * pw(b3, 4) - 6128.0 * pw(b3, 3) + 104.0 * pw(b3, 2) + 272.0 * b3 - 24.0)),
      // d6
      16.0 * (28672.0 * pw(a0, 14) - 512.0 * pw(a0, 12) * (688.0 * pw(b3, 2) + 1102.0 * b3 + 941.0) - 128.0 * pw(a0, 10) * (9696.0 * pw(b3, 4) - 40380.0 * pw(b3, 3) - 33951.0 * pw(b3, 2) - 20148.0 * b3 - 11743.0) - 160.0 * pw(a0, 8) * (5632.0 * pw(b3, 6) - 26064.0 * pw(b3, 5) - 7644.0 * pw(b3, 4) + 35134.0 * pw(b3, 3) - 57181.0 * pw(b3, 2) - 51958.0 * b3 - 5454.0) + 40.0 * pw(a0, 6) * (18944.0 * pw(b3, 8) - 103552.0 * pw(b3, 7) - 737312.0 * pw(b3, 6) - 1217152.0 * pw(b3, 5) - 320576.0 * pw(b3, 4) + 504962.0 * pw(b3, 3) + 120149.0 * pw(b3, 2) - 112824.0 * b3 - 29175.0) + 2.0 * pw(a0, 4) * (577536.0 * pw(b3, 10) + 1111040.0 * pw(b3, 9) - 2474880.0 * pw(b3, 8) - 6705600.0 * pw(b3, 7) - 341600.0 * pw(b3, 6) + 9137976.0 * pw(b3, 5) + 5840100.0 * pw(b3, 4) - 884330.0 * pw(b3, 3) - 684765.0 * pw(b3, 2) + 374580.0 * b3 + 132449.0) + pw(a0, 2) * pw(2.0 * b3 + 1.0, 2) * (80896.0 * pw(b3, 10) + 999808.0 * pw(b3, 9) + 3452640.0 * pw(b3, 8) + 5398208.0 * pw(b3, 7) + 3717992.0 * pw(b3, 6) - 367068.0 * pw(b3, 5) - 2064016.0 * pw(b3, 4) - 746875.0 * pw(b3, 3) + 150774.0 * pw(b3, 2) + 30796.0 * b3 - 25928.0) - pw(2.0 * b3 + 1.0, 4) * (2048.0 * pw(b3, 10) + 25824.0 * pw(b3, 9) + 135752.0 * pw(b3, 8) + 385692.0 * pw(b3, 7) + 535154.0 * pw(b3, 6) + 253167.0 * pw(b3, 5) - 114083.0 * pw(b3, 4) - 118464.0 * pw(b3, 3) - 4364.0 * pw(b3, 2) + 7632.0 * b3 - 656.0)),
      // d8
      5.0 * (40960.0 * pw(a0, 12) - 12288.0 * pw(a0, 10) * (97.0 * pw(b3, 2) + 88.0 * b3 + 44.0) + 256.0 * pw(a0, 8) * (39921.0 * pw(b3, 4) + 34176.0 * pw(b3, 3) + 42870.0 * pw(b3, 2) + 12132.0 * b3 + 1667.0) - 128.0 * pw(a0, 6) * (141080.0 * pw(b3, 6) + 419208.0 * pw(b3, 5) + 389430.0 * pw(b3, 4) + 82228.0 * pw(b3, 3) - 15613.0 * pw(b3, 2) - 100402.0 * b3 - 37063.0) + 48.0 * pw(a0, 4) * (212768.0 * pw(b3, 8) + 1023680.0 * pw(b3, 7) + 1963504.0 * pw(b3, 6) + 1378192.0 * pw(b3, 5) - 304390.0 * pw(b3, 4) - 508976.0 * pw(b3, 3) + 63582.0 * pw(b3, 2) - 57076.0 * b3 - 52349.0) - 8.0 * pw(a0, 2) * (149376.0 * pw(b3, 10) + 1199488.0 * pw(b3, 9) + 4718496.0 * pw(b3, 8) + 9599232.0 * pw(b3, 7) + 9822584.0 * pw(b3, 6) + 3227448.0 * pw(b3, 5) - 2548818.0 * pw(b3, 4) - 2029036.0 * pw(b3, 3) - 53961.0 * pw(b3, 2) + 37902.0 * b3 - 40196.0) + pw(2.0 * b3 + 1.0, 2) * (10304.0 * pw(b3, 10) + 154304.0 * pw(b3, 9) + 911472.0 * pw(b3, 8) + 2786464.0 * pw(b3, 7) + 4828732.0 * pw(b3, 6) + 3895212.0 * pw(b3, 5) + 22345.0 * pw(b3, 4) - 1558688.0 * pw(b3, 3) - 352512.0 * pw(b3, 2) + 133184.0 * b3 - 7840.0)),
      // d10
      - 2.0 * (22528.0 * pw(a0, 10) + 256.0 * pw(a0, 8) * (800.0 * pw(b3, 2) + 3620.0 * b3 + 599.0) + 64.0 * pw(a0, 6) * (5440.0 * pw(b3, 4) - 195290.0 * pw(b3, 3) - 97221.0 * pw(b3, 2) - 44476.0 * b3 + 8375.0) + 16.0 * pw(a0, 4) * (12800.0 * pw(b3, 6) + 1073640.0 * pw(b3, 5) + 2832444.0 * pw(b3, 4) + 2369838.0 * pw(b3, 3) - 242151.0 * pw(b3, 2) - 492540.0 * b3 - 270455.0) + 4.0 * pw(a0, 2) * (17920.0 * pw(b3, 8) - 1188320.0 * pw(b3, 7) - 6499376.0 * pw(b3, 6) - 13648368.0 * pw(b3, 5) - 10198728.0 * pw(b3, 4) + 1289514.0 * pw(b3, 3) + 3579185.0 * pw(b3, 2) + 123260.0 * b3 + 206555.0) + 32768.0 * pw(b3, 10) + 483200.0 * pw(b3, 9) + 3111744.0 * pw(b3, 8) + 10647136.0 * pw(b3, 7) + 19890064.0 * pw(b3, 6) + 19640424.0 * pw(b3, 5) + 5479324.0 * pw(b3, 4) - 6109790.0 * pw(b3, 3) - 3422445.0 * pw(b3, 2) + 504920.0 * b3 + 3560.0),
      // d12
      - 9.0 * (4096.0 * pw(a0, 8) - 128.0 * pw(a0, 6) * (277.0 * pw(b3, 2) - 92.0 * b3 - 55.0) + 48.0 * pw(a0, 4) * (152.0 * pw(b3, 4) + 1944.0 * pw(b3, 3) - 7094.0 * pw(b3, 2) - 1548.0 * b3 + 53.0) + 8.0 * pw(a0, 2) * (5648.0 * pw(b3, 6) + 18912.0 * pw(b3, 5) + 60408.0 * pw(b3, 4) + 115368.0 * pw(b3, 3) + 86625.0 * pw(b3, 2) - 44964.0 * b3 - 18410.0) - 1664.0 * pw(b3, 8) - 22400.0 * pw(b3, 7) - 124064.0 * pw(b3, 6) - 377088.0 * pw(b3, 5) - 624840.0 * pw(b3, 4) - 383256.0 * pw(b3, 3) + 109994.0 * pw(b3, 2) + 181940.0 * b3 - 17605.0),
      // d14
      - 54.0 * (128.0 * pw(a0, 6) - 16.0 * pw(a0, 4) * (48.0 * pw(b3, 2) + 78.0 * b3 - 29.0) + 16.0 * pw(a0, 2) * (72.0 * pw(b3, 4) + 124.0 * pw(b3, 3) + 190.0 * pw(b3, 2) - 101.0 * b3 - 69.0) + pw(2.0 * b3 + 7.0, 2) * (40.0 * pw(b3, 3) + 44.0 * pw(b3, 2) + 62.0 * b3 - 47.0)),
      // d16
      27.0 * (-16.0 * pw(a0, 4) - 8.0 * pw(a0, 2) * (4.0 * pw(b3, 2) - 44.0 * b3 + 13.0) - (2.0 * b3 - 1.0) * pw(2.0 * b3 + 7.0, 3))
  };
}

}  // namespace octupolar
