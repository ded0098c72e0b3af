#include "crouzeix/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "crouzeix/reference_values.hpp"

namespace crouzeix::report {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

Json numbers(const auto& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

Json complex_pair(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

}  // namespace

Json to_json(const conformal::ConformalData& data) {
  Json j;
  j["k"] = data.k;
  j["n"] = data.n_algebraic;
  j["nn"] = data.node_count;
  j["translated"] = data.translated;
  j["cond_estimate"] = number(data.cond_estimate);
  j["residual"] = number(data.residual);
  j["max_discarded_imag"] = number(data.max_discarded_imag);
  j["u0"] = number(data.u0);
  j["g_derivs"] = numbers(data.g_derivs);
  j["toeplitz"] = numbers(data.toeplitz());
  return j;
}

Json to_json(const bounds::BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["lower"] = number(r.lower);
  j["upper"] = number(r.upper);
  j["lower_initial"] = number(r.lower_initial);
  j["upper_initial"] = number(r.upper_initial);
  Json roots = Json::array();
  for (const Complex& z : r.lower_roots) roots.push_back(complex_pair(z));
  j["lower_roots"] = roots;
  j["roots_conjugate_symmetric"] = r.roots_conjugate_symmetric;
  j["lower_six_value_variant"] = r.lower_six_value_variant ? number(*r.lower_six_value_variant) : Json(nullptr);
  j["free_params"] = numbers(r.free_params);
  j["jordan_residual"] = number(r.jordan_residual);
  j["contraction_norm"] = number(r.contraction_norm);
  j["bracket_valid"] = r.bracket_valid;
  const reference::Bracket t = reference::table1(r.n);
  j["table"] = {{"lower", number(t.lower)}, {"upper", number(t.upper)}};
  return j;
}

Json to_json(const conformal::ConvergenceTable& t) {
  Json j;
  j["k"] = t.k;
  j["reference_count"] = t.reference_count;
  j["a_reference"] = number(t.a_reference);
  j["b_reference"] = number(t.b_reference);
  j["g2_reference"] = number(t.g2_reference);
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["nn"] = r.node_count;
    row["n"] = r.n_algebraic;
    row["a"] = number(r.a);
    row["b"] = number(r.b);
    row["g2"] = number(r.g2);
    row["a_ratio"] = number(r.a_ratio);
    row["b_ratio"] = number(r.b_ratio);
    row["g2_ratio"] = number(r.g2_ratio);
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["slope_a"] = number(t.slope_a);
  j["slope_b"] = number(t.slope_b);
  return j;
}

Json to_json(const omega::InclusionReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["max_p_cardioid"] = number(r.max_p_cardioid);
  j["max_dp_quotient"] = number(r.max_dp_quotient);
  j["cap_a"] = number(r.cap_a);
  j["cardioid_certified_bound"] = number(r.cardioid_certified_bound);
  j["min_re_segment"] = number(r.min_re_segment);
  j["max_dre_quotient"] = number(r.max_dre_quotient);
  j["cap_b"] = number(r.cap_b);
  j["segment_certified_bound"] = number(r.segment_certified_bound);
  j["max_re_segment"] = number(r.max_re_segment);
  j["max_im_segment"] = number(r.max_im_segment);
  j["box_ok"] = r.box_ok;
  j["corner_gaps"] = numbers(r.corner_gaps);
  j["corners_ok"] = r.corners_ok;
  j["included"] = r.included;
  return j;
}

Json to_json(const omega::H1Result& h) {
  Json j;
  j["a1"] = number(h.derivs.a1);
  j["b1"] = number(h.derivs.b1);
  j["g1_second"] = number(h.derivs.g2);
  j["cond_h1"] = number(h.cond);
  j["jordan_residual"] = number(h.jordan_residual);
  j["contraction_norm"] = number(h.contraction_norm);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

struct Frame {
  double x0, y1, scale, offset_x, offset_y;

  // y flipped so that Im z grows upwards
  std::pair<double, double> map(Complex z) const {
    return {offset_x + (z.real() - x0) * scale, offset_y + (y1 - z.imag()) * scale};
  }
};

constexpr double kSize = 600.0;
constexpr double kMargin = 0.05 * kSize;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string path_data(const Frame& f, const std::vector<Complex>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [x, y] = f.map(pts[i]);
    out += (i == 0 ? "M" : " L") + fmt(x) + "," + fmt(y);
  }
  return out;
}

}  // namespace

std::string boundary_svg(const kms::BoundaryDiscretization& d) {
  using std::numbers::pi;
  const kms::BoundaryDescription desc = kms::describe_boundary(d.k);
  const std::size_t total = d.nodes.size();
  const std::size_t arc_end = d.upper_arc_end();
  const std::size_t seg_end = total - arc_end;  // first node of the lower arc

  // Algebraic part: lower arc, wrapping through node 0 to the top of the upper arc.
  std::vector<Complex> algebraic;
  for (std::size_t i = seg_end; i < total; ++i) algebraic.push_back(d.nodes[i]);
  for (std::size_t i = 0; i <= arc_end; ++i) algebraic.push_back(d.nodes[i]);
  std::vector<Complex> segment(d.nodes.begin() + static_cast<std::ptrdiff_t>(arc_end),
                               d.nodes.begin() + static_cast<std::ptrdiff_t>(seg_end));
  segment.push_back(d.nodes[seg_end]);

  // The full curve phi_k over [0, 2 pi]; outside |theta| <= 2 pi / k it lies inside W.
  std::vector<Complex> remainder;
  const int steps = std::max(720, 8 * d.k);
  for (int j = 0; j <= steps; ++j) {
    const double t = desc.algebraic_half_range + (2.0 * pi - 2.0 * desc.algebraic_half_range) * j / steps;
    remainder.push_back(kms::boundary_point(d.k, t));
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto* set : {&algebraic, &segment, &remainder}) {
    for (const Complex& z : *set) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  }
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double scale = span > 0 ? (kSize - 2 * kMargin) / span : 1.0;
  const Frame frame{xmin, ymax, scale, kMargin + 0.5 * ((kSize - 2 * kMargin) - (xmax - xmin) * scale),
                    kMargin + 0.5 * ((kSize - 2 * kMargin) - (ymax - ymin) * scale)};

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\" width=\"600\" height=\"600\">\n";
  svg += "  <title>W(A_" + std::to_string(d.k) + ")</title>\n";
  svg += "  <path data-part=\"remainder\" d=\"" + path_data(frame, remainder) +
         "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  svg += "  <path data-part=\"algebraic\" d=\"" + path_data(frame, algebraic) +
         "\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"2\"/>\n";
  svg += "  <path data-part=\"segment\" d=\"" + path_data(frame, segment) +
         "\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"2\"/>\n";
  for (double angle : desc.cusp_angles) {
    for (Complex z : {kms::boundary_point(d.k, angle), std::conj(kms::boundary_point(d.k, angle))}) {
      const auto [x, y] = frame.map(z);
      svg += "  <circle class=\"cusp\" cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\" fill=\"#555555\"/>\n";
    }
  }
  for (Complex z : desc.flat_points) {
    const auto [x, y] = frame.map(z);
    svg += "  <rect class=\"flat\" x=\"" + fmt(x - 2.5) + "\" y=\"" + fmt(y - 2.5) +
           "\" width=\"5\" height=\"5\" fill=\"#b03a2e\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace crouzeix::report
