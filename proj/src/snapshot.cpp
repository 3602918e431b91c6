#include "liemag/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace liemag {

namespace {

constexpr char kMagic[8] = {'L', 'M', 'S', 'N', 'A', 'P', '1', '\n'};

template <typename T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("snapshot: truncated file");
  return v;
}

}  // namespace

void save_snapshot(const std::string& path, const SimState& st) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("snapshot: cannot open " + path + " for writing");
  os.write(kMagic, sizeof(kMagic));
  put<int32_t>(os, st.grid.rank);
  for (int a = 0; a < 3; ++a) put<int32_t>(os, st.grid.n[a]);
  for (int a = 0; a < 3; ++a) put<double>(os, st.grid.h[a]);
  put<double>(os, st.time);
  put<int64_t>(os, st.step);
  put<int32_t>(os, static_cast<int32_t>(st.fields.size()));
  for (const auto& [id, f] : st.fields) {
    put<int32_t>(os, static_cast<int32_t>(id));
    put<int32_t>(os, f.ncomp());
    os.write(reinterpret_cast<const char*>(f.raw().data()),
             static_cast<std::streamsize>(f.raw().size() * sizeof(double)));
  }
  if (!os) throw std::runtime_error("snapshot: write failed for " + path);
}

SimState load_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("snapshot: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("snapshot: bad magic in " + path);
  SimState st;
  int32_t rank = get<int32_t>(is);
  std::array<int, 3> n;
  for (int a = 0; a < 3; ++a) n[a] = get<int32_t>(is);
  std::array<double, 3> h;
  for (int a = 0; a < 3; ++a) h[a] = get<double>(is);
  st.grid = Grid(rank, n, h);
  st.time = get<double>(is);
  st.step = get<int64_t>(is);
  int32_t nf = get<int32_t>(is);
  for (int32_t k = 0; k < nf; ++k) {
    auto id = static_cast<FieldId>(get<int32_t>(is));
    int32_t nc = get<int32_t>(is);
    Field f(st.grid, nc);
    is.read(reinterpret_cast<char*>(f.raw().data()),
            static_cast<std::streamsize>(f.raw().size() * sizeof(double)));
    if (!is) throw std::runtime_error("snapshot: truncated field data in " + path);
    st.fields.emplace_back(id, std::move(f));
  }
  return st;
}

}  // namespace liemag
