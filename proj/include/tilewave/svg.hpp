#pragma once

#include "tilewave/geometry.hpp"

#include <string>
#include <vector>

namespace tilewave::svg {

/// Minimal deterministic SVG 1.1 writer: fixed 6-decimal coordinates,
/// elements emitted in insertion order, y-axis flipped to mathematical
/// orientation.
class Canvas {
public:
    Canvas(double xmin, double ymin, double xmax, double ymax, double scale = 120.0);

    void polygon(const geometry::ShadowPolygon& poly, const std::string& fill,
                 const std::string& stroke, double stroke_width = 1.0);
    void polygon(const geometry::Polygon& poly, const std::string& fill,
                 const std::string& stroke, double stroke_width = 1.0);
    void region(const geometry::Region& r, const std::string& fill, const std::string& stroke,
                double stroke_width = 1.0);
    void region(const geometry::ShadowRegion& r, const std::string& fill,
                const std::string& stroke, double stroke_width = 1.0);
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double stroke_width = 1.0);
    void text(double x, double y, const std::string& label, double size = 14.0);
    void axes(const std::string& stroke = "#888888");

    std::string str() const;

private:
    double tx(double x) const;
    double ty(double y) const;

    double xmin_, ymin_, xmax_, ymax_, scale_;
    std::vector<std::string> elements_;
};

/// Write atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tilewave::svg
