#include "tilewave/svg.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tilewave::svg {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

Canvas::Canvas(double xmin, double ymin, double xmax, double ymax, double scale)
    : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax), scale_(scale) {}

double Canvas::tx(double x) const { return (x - xmin_) * scale_; }
double Canvas::ty(double y) const { return (ymax_ - y) * scale_; }

void Canvas::polygon(const geometry::ShadowPolygon& poly, const std::string& fill,
                     const std::string& stroke, double stroke_width) {
    std::string d = "<path d=\"";
    for (size_t i = 0; i < poly.v.size(); ++i) {
        d += (i == 0 ? "M " : "L ");
        d += fmt(tx(poly.v[i].x)) + " " + fmt(ty(poly.v[i].y)) + " ";
    }
    d += "Z\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
         fmt(stroke_width) + "\"/>";
    elements_.push_back(std::move(d));
}

void Canvas::polygon(const geometry::Polygon& poly, const std::string& fill,
                     const std::string& stroke, double stroke_width) {
    geometry::ShadowPolygon sp;
    sp.v.reserve(poly.v.size());
    for (const auto& v : poly.v) sp.v.push_back({to_double(v.x), to_double(v.y)});
    polygon(sp, fill, stroke, stroke_width);
}

void Canvas::region(const geometry::Region& r, const std::string& fill, const std::string& stroke,
                    double stroke_width) {
    for (const auto& p : r.parts) polygon(p, fill, stroke, stroke_width);
}

void Canvas::region(const geometry::ShadowRegion& r, const std::string& fill,
                    const std::string& stroke, double stroke_width) {
    for (const auto& p : r.parts) polygon(p, fill, stroke, stroke_width);
}

void Canvas::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                  double stroke_width) {
    elements_.push_back("<line x1=\"" + fmt(tx(x1)) + "\" y1=\"" + fmt(ty(y1)) + "\" x2=\"" +
                        fmt(tx(x2)) + "\" y2=\"" + fmt(ty(y2)) + "\" stroke=\"" + stroke +
                        "\" stroke-width=\"" + fmt(stroke_width) + "\"/>");
}

void Canvas::text(double x, double y, const std::string& label, double size) {
    elements_.push_back("<text x=\"" + fmt(tx(x)) + "\" y=\"" + fmt(ty(y)) + "\" font-size=\"" +
                        fmt(size) + "\" font-family=\"sans-serif\">" + label + "</text>");
}

void Canvas::axes(const std::string& stroke) {
    line(xmin_, 0, xmax_, 0, stroke, 0.8);
    line(0, ymin_, 0, ymax_, stroke, 0.8);
}

std::string Canvas::str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt((xmax_ - xmin_) * scale_) + "\" height=\"" + fmt((ymax_ - ymin_) * scale_) + "\">\n";
    for (const auto& e : elements_) {
        out += e;
        out += "\n";
    }
    out += "</svg>\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("write_file_atomic: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace tilewave::svg
