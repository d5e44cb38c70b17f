#pragma once

#include <iosfwd>
#include <string>

#include "gromet/ball_profile.hpp"
#include "gromet/finite_metric.hpp"
#include "gromet/trimesh.hpp"

namespace gromet {

/// Plain-text mesh format:
///   trimesh v1
///   v <count>
///   t i j k
///   e i j <length>
///   l <name> i1 i2 ...
/// Lengths round-trip bit-exactly (printed with max_digits10).
void write_trimesh(const TriMesh& mesh, std::ostream& out);
void write_trimesh_file(const TriMesh& mesh, const std::string& path);
TriMesh read_trimesh(std::istream& in);
TriMesh read_trimesh_file(const std::string& path);

/// Profile CSV with header r,ell,area,chi,n,components.
void write_profile_csv(const BallProfile& profile, std::ostream& out);
void write_profile_csv_file(const BallProfile& profile, const std::string& path);

/// Scalar profile CSV with header r,value.
void write_scalar_profile_csv(const ScalarProfile& profile, std::ostream& out);

/// Metric CSV: strict lower triangle, one row per point starting from the
/// second (row i holds d(i,0) ... d(i,i-1)).
void write_metric_csv(const FiniteMetric& metric, std::ostream& out);
void write_metric_csv_file(const FiniteMetric& metric, const std::string& path);
FiniteMetric read_metric_csv(std::istream& in);
FiniteMetric read_metric_csv_file(const std::string& path);

} // namespace gromet
