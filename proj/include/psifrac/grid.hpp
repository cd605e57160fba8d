#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace psifrac {

enum class Grading { uniform, graded };

/// Mesh on [a,b] with nodes t_0 = a < t_1 < ... < t_n = b. Graded meshes
/// cluster nodes near a via t_i = a + (b-a)*(i/n)^q, q >= 1, which is what
/// the weakly singular quadrature needs to keep its order.
class Grid {
public:
    static Grid uniform(double a, double b, std::size_t n_cells);
    static Grid graded(double a, double b, std::size_t n_cells, double q);

    double a() const { return a_; }
    double b() const { return b_; }
    std::size_t cells() const { return nodes_->size() - 1; }
    std::size_t size() const { return nodes_->size(); }  // node count
    double node(std::size_t i) const { return (*nodes_)[i]; }
    std::span<const double> nodes() const { return {nodes_->data(), nodes_->size()}; }
    Grading grading() const { return grading_; }
    double grading_q() const { return q_; }

    bool same_nodes_as(const Grid& other) const;

private:
    Grid(double a, double b, Grading grading, double q, std::vector<double> nodes);

    double a_ = 0.0;
    double b_ = 1.0;
    Grading grading_ = Grading::uniform;
    double q_ = 1.0;
    std::shared_ptr<const std::vector<double>> nodes_;
};

}  // namespace psifrac
