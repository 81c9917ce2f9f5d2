#pragma once

#include <cmath>
#include <numbers>

namespace helmsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// One international knot in m/s.
inline constexpr double kKnotMps = 1852.0 / 3600.0;

constexpr double deg2rad(double d) { return d * (kPi / 180.0); }
constexpr double rad2deg(double r) { return r * (180.0 / kPi); }

/// Earth-fixed horizontal vector: x points north, y points east.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Wrap an angle to [-pi, pi).
double wrap_pi(double a);

/// Wrap an angle to [0, 2*pi).
double wrap_two_pi(double a);

/// Shortest signed angular difference a - b, in (-pi, pi].
double angle_diff(double a, double b);

/// Shortest-path interpolation between angles a and b at weight w in [0, 1].
double lerp_angle(double a, double b, double w);

/// Rotate a body-frame vector into the earth frame. Heading psi is measured
/// clockwise from north; body x points toward the bow, body y to starboard.
Vec2 earth_from_body(double psi, Vec2 body);

/// Rotate an earth-frame vector into the body frame (inverse of the above).
Vec2 body_from_earth(double psi, Vec2 earth);

}  // namespace helmsim
