#pragma once

// Reference values used by the acceptance checks, transcribed by hand.

namespace sq::oracle {

// numerator of the single hexagon trace; the trace is this over a^2 b^2 c^2
inline const char* kHexagonEta =
    "a^4*b^4*c^4 + a^4*b^4*c^2 + a^4*b^2*c^4 + a^2*b^4*c^4 + a^4*b^2*c^2 + a^2*b^4*c^2 + "
    "a^2*b^2*c^4 + 4*a^2*b^2*c^2 + a^2*b^2 + a^2*c^2 + b^2*c^2 + a^2 + b^2 + c^2 + 1";

// the same after a^2, b^2, c^2 -> r, s, t
inline const char* kHexagonRst =
    "r^2*s^2*t^2 + r^2*s^2*t + r^2*s*t^2 + r*s^2*t^2 + r^2*s*t + r*s^2*t + r*s*t^2 + 4*r*s*t + "
    "r*s + s*t + r*t + r + s + t + 1";

// colored generating function of the 2x2x4 box
inline const char* kGf224 =
    "q^4*r^4*s^4*t^4 + q^3*r^4*s^4*t^4 + q^3*r^4*s^4*t^3 + q^3*r^4*s^3*t^4 + q^3*r^3*s^4*t^4 + "
    "q^3*r^4*s^3*t^3 + q^3*r^3*s^4*t^3 + q^2*r^4*s^4*t^3 + q^3*r^3*s^3*t^4 + q^2*r^4*s^4*t^2 + "
    "4*q^3*r^3*s^3*t^3 + q^2*r^4*s^3*t^3 + q^2*r^3*s^4*t^3 + q^3*r^3*s^3*t^2 + q^2*r^4*s^3*t^2 + "
    "q^2*r^3*s^4*t^2 + q^3*r^3*s^2*t^3 + q^3*r^2*s^3*t^3 + 3*q^2*r^3*s^3*t^3 + q^3*r^3*s^2*t^2 + "
    "q^3*r^2*s^3*t^2 + 4*q^2*r^3*s^3*t^2 + q^3*r^2*s^2*t^3 + 2*q^2*r^3*s^2*t^3 + "
    "2*q^2*r^2*s^3*t^3 + q^2*r^3*s^3*t + q^3*r^2*s^2*t^2 + 3*q^2*r^3*s^2*t^2 + "
    "3*q^2*r^2*s^3*t^2 + 3*q^2*r^2*s^2*t^3 + q^2*r^3*s^2*t + q^2*r^2*s^3*t + 9*q^2*r^2*s^2*t^2 + "
    "q^2*r^2*s*t^3 + q^2*r*s^2*t^3 + 3*q^2*r^2*s^2*t + 3*q^2*r^2*s*t^2 + 3*q^2*r*s^2*t^2 + "
    "q*r^2*s^2*t^2 + q^2*r*s*t^3 + 2*q^2*r^2*s*t + 2*q^2*r*s^2*t + q*r^2*s^2*t + 4*q^2*r*s*t^2 + "
    "q*r^2*s*t^2 + q*r*s^2*t^2 + 3*q^2*r*s*t + q*r^2*s*t + q*r*s^2*t + q^2*r*t^2 + q^2*s*t^2 + "
    "q*r*s*t^2 + q^2*r*t + q^2*s*t + 4*q*r*s*t + q^2*t^2 + q*r*s + q^2*t + q*r*t + q*s*t + q*r + "
    "q*s + q*t + q + 1";

// two-hexagon loop fiber, times q^2 t
inline const char* kTwoHex66 =
    "r^4*s^4*t^2 + r^4*s^4*t + r^4*s^3*t^2 + r^3*s^4*t^2 + r^4*s^3*t + r^3*s^4*t + "
    "3*r^3*s^3*t^2 + 4*r^3*s^3*t + 2*r^3*s^2*t^2 + 2*r^2*s^3*t^2 + r^3*s^3 + 3*r^3*s^2*t + "
    "3*r^2*s^3*t + 3*r^2*s^2*t^2 + r^3*s^2 + r^2*s^3 + 8*r^2*s^2*t + r^2*s*t^2 + r*s^2*t^2 + "
    "3*r^2*s^2 + 3*r^2*s*t + 3*r*s^2*t + r*s*t^2 + 2*r^2*s + 2*r*s^2 + 4*r*s*t + 3*r*s + r*t + "
    "s*t + r + s + t + 1";

// turn sequence around the snake, read right to left
inline const char* kSnakeTurns = "LLLRRLLRLLLLRRLLRL";
inline const char* kSnakeWord = "g'(b'a'ga')^2g(bag'a)^2";

inline const long kCount222 = 20;
inline const long kCount444 = 232848;
inline const long kLoopInLoop444 = 23364;
inline const long kSnakeTrace = 2306;

// plane partition by volume, n = 0..8
inline const long kVolumeCounts[] = {1, 1, 3, 6, 13, 24, 48, 86, 160};

}  // namespace sq::oracle
