#include "gromet/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gromet {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return in;
}

} // namespace

void write_trimesh(const TriMesh& mesh, std::ostream& out) {
    out << "trimesh v1\n";
    out << "v " << mesh.vertex_count() << "\n";
    for (const auto& t : mesh.triangles()) {
        out << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
        out << "e " << mesh.edges()[e][0] << " " << mesh.edges()[e][1] << " "
            << mesh.edge_lengths()[e] << "\n";
    }
    for (const auto& [name, verts] : mesh.labels()) {
        out << "l " << name;
        for (int v : verts) {
            out << " " << v;
        }
        out << "\n";
    }
}

void write_trimesh_file(const TriMesh& mesh, const std::string& path) {
    auto out = open_out(path);
    write_trimesh(mesh, out);
}

TriMesh read_trimesh(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != "trimesh v1") {
        throw std::runtime_error("not a trimesh v1 file");
    }
    TriMesh::Input input;
    std::string line;
    bool have_count = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            ls >> input.vertex_count;
            have_count = true;
        } else if (tag == "t") {
            std::array<int, 3> t{};
            ls >> t[0] >> t[1] >> t[2];
            if (!ls) {
                throw std::runtime_error("malformed triangle line: " + line);
            }
            input.triangles.push_back(t);
        } else if (tag == "e") {
            int u, v;
            double len;
            ls >> u >> v >> len;
            if (!ls) {
                throw std::runtime_error("malformed edge line: " + line);
            }
            input.edge_lengths.emplace_back(u, v, len);
        } else if (tag == "l") {
            std::string name;
            ls >> name;
            std::vector<int> verts;
            int v;
            while (ls >> v) {
                verts.push_back(v);
            }
            input.labels[name] = std::move(verts);
        } else {
            throw std::runtime_error("unknown trimesh line tag '" + tag + "'");
        }
    }
    if (!have_count) {
        throw std::runtime_error("trimesh file has no vertex count");
    }
    return TriMesh::build(std::move(input));
}

TriMesh read_trimesh_file(const std::string& path) {
    auto in = open_in(path);
    return read_trimesh(in);
}

void write_profile_csv(const BallProfile& profile, std::ostream& out) {
    out << "r,ell,area,chi,n,components\n";
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < profile.radii.size(); ++i) {
        out << profile.radii[i] << "," << profile.boundary_length[i] << ","
            << profile.area[i] << "," << profile.euler_char[i] << ","
            << profile.n_gen[i] << "," << profile.component_count[i] << "\n";
    }
}

void write_profile_csv_file(const BallProfile& profile, const std::string& path) {
    auto out = open_out(path);
    write_profile_csv(profile, out);
}

void write_scalar_profile_csv(const ScalarProfile& profile, std::ostream& out) {
    profile.validate();
    out << "r,value\n";
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out << profile.grid[i] << "," << profile.values[i] << "\n";
    }
}

void write_metric_csv(const FiniteMetric& metric, std::ostream& out) {
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (int i = 1; i < metric.size(); ++i) {
        for (int j = 0; j < i; ++j) {
            if (j) {
                out << ",";
            }
            out << metric(i, j);
        }
        out << "\n";
    }
}

void write_metric_csv_file(const FiniteMetric& metric, const std::string& path) {
    auto out = open_out(path);
    write_metric_csv(metric, out);
}

FiniteMetric read_metric_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        if (row.size() != rows.size() + 1) {
            throw std::runtime_error("metric CSV row " + std::to_string(rows.size() + 1) +
                                     " has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(rows.size() + 1));
        }
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size()) + 1;
    std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            dense[static_cast<std::size_t>(i) * n + j] = rows[i - 1][j];
            dense[static_cast<std::size_t>(j) * n + i] = rows[i - 1][j];
        }
    }
    return FiniteMetric::from_matrix(n, std::move(dense));
}

FiniteMetric read_metric_csv_file(const std::string& path) {
    auto in = open_in(path);
    return read_metric_csv(in);
}

} // namespace gromet
