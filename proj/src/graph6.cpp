#include "cvg/graph6.hpp"

#include <fstream>
#include <sstream>

namespace cvg {

namespace {
constexpr int kBias = 63;

void check_byte(char c) {
  unsigned char b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw InvalidGraph6("byte out of printable graph6 range");
}
}  // namespace

Graph decode_graph6(const std::string& s) {
  if (s.empty()) throw InvalidGraph6("empty string");
  for (char c : s) check_byte(c);
  if (s[0] == '~')
    throw InvalidGraph6("multi-byte order header: only n <= 16 supported");
  const int n = s[0] - kBias;
  if (n > 16) throw InvalidGraph6("order exceeds 16");
  const int pairs = n * (n - 1) / 2;
  const int body = (pairs + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + body)
    throw InvalidGraph6("length does not match order");

  Graph g(n);
  int t = 0;  // pair index in column order
  for (int k = 0; k < body; ++k) {
    int bits = s[1 + k] - kBias;
    for (int b = 5; b >= 0; --b, ++t) {
      const bool set = (bits >> b) & 1;
      if (t >= pairs) {
        if (set) throw InvalidGraph6("nonzero padding bits");
        continue;
      }
      if (set) {
        // Invert t -> (i, j): column j holds pairs j(j-1)/2 .. j(j+1)/2 - 1.
        int j = 1;
        while ((j + 1) * j / 2 <= t) ++j;
        int i = t - j * (j - 1) / 2;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, char(n + kBias));
  const int pairs = n * (n - 1) / 2;
  int acc = 0, nbits = 0;
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + kBias));
  (void)pairs;
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph list: " + path);
  return read_graph6_lines(in);
}

}  // namespace cvg
