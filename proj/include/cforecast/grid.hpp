#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

// Dense row-major 2-D array of doubles. Backing store for masks, time maps,
// flow fields and rendered frames. Values are expected to stay finite;
// validate_finite() enforces it at module boundaries.
struct Grid {
    int height = 0;
    int width = 0;
    std::vector<double> values;

    Grid() = default;
    Grid(int h, int w, double fill = 0.0) : height(h), width(w) {
        if (h < 0 || w < 0) throw std::invalid_argument("Grid: negative dimensions");
        values.assign(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill);
    }

    double& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
    double at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }

    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
    std::size_t size() const { return values.size(); }
    bool same_shape(const Grid& o) const { return height == o.height && width == o.width; }

    bool operator==(const Grid& o) const = default;
};

// Row-major matrix of doubles; rows/cols named to keep linear algebra
// distinct from image-space grids.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimensions");
        values.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool operator==(const Matrix& o) const = default;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);

void validate_finite(const Grid& g, const std::string& what);
void validate_finite(const Matrix& m, const std::string& what);

// Pixel-count helpers shared by mask algebra and metrics.
int count_nonzero(const Grid& g);
void require_same_shape(const Grid& a, const Grid& b, const std::string& op);

}  // namespace cf
