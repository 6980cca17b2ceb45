#include "ploi/plot.hpp"

#include <array>
#include <sstream>

namespace ploi {

namespace {

constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string svg_plot(std::span<const PLMap> maps, int pixels) {
    mpz_class d = 1;
    for (const auto& g : maps)
        for (const auto& b : g.vertices()) {
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), b.x.denominator().get_mpz_t());
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), b.y.denominator().get_mpz_t());
        }
    auto scaled = [&](const Rational& r) {
        mpz_class v = r.numerator() * (d / r.denominator());
        return v.get_str();
    };
    auto flipped = [&](const Rational& r) { return scaled(Rational(1) - r); };

    std::ostringstream out;
    const std::string ds = d.get_str();
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels
        << "\" viewBox=\"0 0 " << ds << ' ' << ds << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << ds << "\" height=\"" << ds
        << "\" fill=\"none\" stroke=\"#000000\" vector-effect=\"non-scaling-stroke\"/>\n";
    out << "  <line x1=\"0\" y1=\"" << ds << "\" x2=\"" << ds << "\" y2=\"0\" stroke=\"#999999\" "
        << "stroke-dasharray=\"4 4\" vector-effect=\"non-scaling-stroke\"/>\n";
    for (std::size_t i = 0; i < maps.size(); ++i) {
        out << "  <polyline fill=\"none\" stroke=\"" << kColors[i % kColors.size()]
            << "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\" points=\"";
        const auto& v = maps[i].vertices();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out << ' ';
            out << scaled(v[k].x) << ',' << flipped(v[k].y);
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ploi
