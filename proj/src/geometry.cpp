#include "helmsim/geometry.hpp"

namespace helmsim {

double wrap_pi(double a) {
    double w = std::remainder(a, kTwoPi);
    if (w >= kPi) w -= kTwoPi;
    return w;
}

double wrap_two_pi(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

double angle_diff(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    if (d <= -kPi) d += kTwoPi;
    return d;
}

double lerp_angle(double a, double b, double w) {
    return wrap_pi(a + w * angle_diff(b, a));
}

Vec2 earth_from_body(double psi, Vec2 body) {
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    return {body.x * c - body.y * s, body.x * s + body.y * c};
}

Vec2 body_from_earth(double psi, Vec2 earth) {
    const double c = std::cos(psi);
    const double s = std::sin(psi);
    return {earth.x * c + earth.y * s, -earth.x * s + earth.y * c};
}

}  // namespace helmsim
