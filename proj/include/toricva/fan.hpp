#pragma once

#include "toricva/cone.hpp"

#include <cstddef>
#include <vector>

namespace toricva {

/// A codimension-one cone sigma ∩ tau between two adjacent maximal cones.
struct Wall {
    std::size_t sigma = 0;
    std::size_t tau = 0;
    std::vector<std::size_t> wall_rays;  // global ray indices of sigma ∩ tau
    LatticeVector u;                     // primitive, in M; ray of sigma^∨ perpendicular to the wall
    std::size_t v_j = 0;                 // chosen ray of tau outside sigma
    std::vector<std::size_t> v_candidates;  // every ray of tau outside sigma

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// A complete fan in N: global rays, maximal cones by ray index, and walls.
class Fan {
  public:
    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    std::size_t num_cones() const { return cone_rays_.size(); }
    /// Sorted global ray indices of a maximal cone.
    const std::vector<std::size_t>& cone_rays(std::size_t sigma) const { return cone_rays_.at(sigma); }
    const Cone& cone(std::size_t sigma) const { return cones_.at(sigma); }
    const Cone& dual(std::size_t sigma) const { return duals_.at(sigma); }
    const std::vector<Wall>& walls() const { return walls_; }
    bool is_simplicial() const;

  private:
    friend Fan build_fan(std::vector<std::vector<std::size_t>> max_cones, std::vector<LatticeVector> rays,
                         std::size_t rank);
    std::size_t rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<std::size_t>> cone_rays_;
    std::vector<Cone> cones_;
    std::vector<Cone> duals_;
    std::vector<Wall> walls_;
};

/// Validates the cones (full-dimensional, pointed, listed rays extreme), face
/// compatibility ("not a fan") and completeness ("fan not complete"), then
/// extracts the walls. Each wall is stored once with sigma < tau.
Fan build_fan(std::vector<std::vector<std::size_t>> max_cones, std::vector<LatticeVector> rays,
              std::size_t rank);

/// Walls touching sigma, oriented so that `sigma` is the queried cone and `u`
/// is the sigma-side normal.
std::vector<Wall> walls_of_cone(const Fan& f, std::size_t sigma);

/// Index of the maximal cone whose global ray set is exactly `ray_indices`.
std::optional<std::size_t> find_cone(const Fan& f, std::vector<std::size_t> ray_indices);

/// Normal fan of a full-dimensional lattice polytope given by points in M.
struct PolytopeFan {
    Fan fan;
    std::vector<LatticeVector> vertices;  // vertex i corresponds to maximal cone i
    std::vector<Integer> support;         // P = {u : <u, v_i> >= -support[i]}
};
PolytopeFan normal_fan(std::span<const LatticeVector> points);

/// Face fan of conv(points) for points in N with the origin in the interior.
Fan face_fan(std::span<const LatticeVector> points);

}  // namespace toricva
