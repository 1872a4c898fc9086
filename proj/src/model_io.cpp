#include "gmi/model_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "gmi/csv.hpp"

namespace gmi {

namespace {

constexpr char kMagic[5] = {'G', 'M', 'I', 'V', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw ConfigError("model file truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& out, double x) {
  std::uint64_t v;
  static_assert(sizeof v == sizeof x);
  std::memcpy(&v, &x, 8);
  put_u64(out, v);
}

double get_f64(std::istream& in) {
  const std::uint64_t v = get_u64(in);
  double x;
  std::memcpy(&x, &v, 8);
  return x;
}

void put_matrix(std::ostream& out, std::uint64_t tag, const Matrix& m) {
  put_u64(out, tag);
  put_u64(out, static_cast<std::uint64_t>(m.rows()));
  put_u64(out, static_cast<std::uint64_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) put_f64(out, m(i, j));
}

Matrix get_matrix(std::istream& in) {
  const auto rows = static_cast<Index>(get_u64(in));
  const auto cols = static_cast<Index>(get_u64(in));
  if (rows < 0 || cols < 0 || rows > (1 << 24) || cols > (1 << 24))
    throw ConfigError("model file has implausible matrix dimensions");
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = get_f64(in);
  return m;
}

}  // namespace

void save_model(const GrassmannInterpolant& interp, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open model file for writing: " + path);
  out.write(kMagic, 5);
  put_u64(out, static_cast<std::uint64_t>(interp.n));
  put_u64(out, static_cast<std::uint64_t>(interp.p));
  put_u64(out, static_cast<std::uint64_t>(interp.chart.ref_index));
  put_u64(out, interp.mode == FitMode::Lagrange ? 0 : 1);
  std::uint64_t kind = 0;
  if (interp.model.kind == BasisKind::HermiteAugmented) kind = 1;
  if (interp.model.kind == BasisKind::HermiteSurrogate) kind = 2;
  put_u64(out, kind);
  put_u64(out, static_cast<std::uint64_t>(interp.model.degree));
  put_u64(out, static_cast<std::uint64_t>(interp.model.aux_count));
  put_u64(out, interp.model.stacked_warning ? 1 : 0);
  put_f64(out, interp.model.map.a);
  put_f64(out, interp.model.map.b);
  put_f64(out, interp.model.start_scale);
  put_f64(out, interp.model.stacked_cond);
  put_matrix(out, 1, interp.chart.Qframe);
  put_matrix(out, 2, interp.nodes);
  put_matrix(out, 3, interp.model.H);
  put_matrix(out, 4, interp.model.A);
  put_u64(out, 0);
  if (!out) throw ConfigError("failed writing model file: " + path);
}

GrassmannInterpolant load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open model file: " + path);
  char magic[5];
  in.read(magic, 5);
  if (!in || std::memcmp(magic, kMagic, 5) != 0)
    throw ConfigError("not a model file: " + path);

  GrassmannInterpolant interp;
  interp.n = static_cast<Index>(get_u64(in));
  interp.p = static_cast<Index>(get_u64(in));
  interp.chart.ref_index = static_cast<Index>(get_u64(in));
  interp.mode = get_u64(in) == 0 ? FitMode::Lagrange : FitMode::Hermite;
  const std::uint64_t kind = get_u64(in);
  interp.model.kind = kind == 0   ? BasisKind::Lagrange
                      : kind == 1 ? BasisKind::HermiteAugmented
                                  : BasisKind::HermiteSurrogate;
  interp.model.degree = static_cast<int>(get_u64(in));
  interp.model.aux_count = static_cast<int>(get_u64(in));
  interp.model.stacked_warning = get_u64(in) != 0;
  interp.model.map.a = get_f64(in);
  interp.model.map.b = get_f64(in);
  interp.model.start_scale = get_f64(in);
  interp.model.stacked_cond = get_f64(in);

  bool done = false;
  while (!done) {
    const std::uint64_t tag = get_u64(in);
    switch (tag) {
      case 0: done = true; break;
      case 1: interp.chart.Qframe = get_matrix(in); break;
      case 2: interp.nodes = get_matrix(in).col(0); break;
      case 3: interp.model.H = get_matrix(in); break;
      case 4: interp.model.A = get_matrix(in); break;
      default: throw ConfigError("model file has an unknown section");
    }
  }
  interp.chart.n = interp.n;
  interp.chart.p = interp.p;
  interp.model.nodes = interp.nodes;
  if (interp.chart.Qframe.rows() != interp.n || interp.chart.Qframe.cols() != interp.n)
    throw ConfigError("model file chart has wrong dimensions");
  return interp;
}

Matrix read_matrix_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file: " + path);
  Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw ConfigError("matrix file must start with 'rows cols': " + path);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (!(in >> m(i, j))) throw ConfigError("matrix file truncated: " + path);
  return m;
}

void write_matrix_text(const Matrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open matrix file for writing: " + path);
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw ConfigError("failed writing matrix file: " + path);
}

}  // namespace gmi
