#include <algorithm>
#include <array>
#include <ostream>

#include "lacunary/sweep.hpp"

namespace lacunary {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#f2f2f2", "#4e79a7", "#f28e2b", "#59a14f",
                                                 "#e15759", "#b07aa1", "#76b7b2", "#edc948"};

struct LegendEntry {
  int key;
  std::string label;
};

int category(const SweepRow& r, SvgColoring coloring) {
  switch (coloring) {
    case SvgColoring::Region: return r.thm3_region;
    case SvgColoring::Case: return r.thm4_case;
    case SvgColoring::LemmaIndex: return static_cast<int>(std::min<u64>(r.lemma_index, 6)) + 1;
  }
  return 0;
}

std::vector<LegendEntry> legend(SvgColoring coloring) {
  switch (coloring) {
    case SvgColoring::Region:
      return {{0, "no region: f° = (q-1)/d - ℓ"},
              {1, "1: d(ℓ + g°)"},
              {2, "2: q - 1 - d²ℓ"},
              {3, "3: d max{d(ℓ + g°) - (q-1)/d, dg°}"}};
    case SvgColoring::Case:
      return {{1, "case 1"}, {2, "case 2"}, {3, "case 3: d(ℓ + g°)"}, {4, "case 4: f°"}};
    case SvgColoring::LemmaIndex: {
      std::vector<LegendEntry> out;
      for (int i = 0; i <= 5; ++i) out.push_back({i + 1, "minimum at i = " + std::to_string(i)});
      out.push_back({7, "minimum at i >= 6"});
      return out;
    }
  }
  return {};
}

}  // namespace

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows, u64 group_order, u64 d,
                     SvgColoring coloring) {
  const u64 block = group_order / d;
  const double plot = 600.0;
  const double cell = plot / static_cast<double>(std::max<u64>(block, 1));
  const double margin = 60.0;
  const double legend_w = 320.0;
  const double width = margin * 2 + plot + legend_w;
  const double height = margin * 2 + plot;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"24\">q - 1 = " << group_order << ", d = " << d << "</text>\n";
  for (const SweepRow& r : rows) {
    const double x = margin + static_cast<double>(r.g_degree) * cell;
    const double y = margin + plot - static_cast<double>(r.ell + 1) * cell;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"" << kPalette[category(r, coloring) % kPalette.size()] << "\"/>\n";
  }
  // Axes: g° to the right, l upwards.
  out << "<line x1=\"" << margin << "\" y1=\"" << margin + plot << "\" x2=\"" << margin + plot
      << "\" y2=\"" << margin + plot << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << margin + plot << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << margin + plot / 2 << "\" y=\"" << margin + plot + 36 << "\">g°</text>\n";
  out << "<text x=\"" << margin - 40 << "\" y=\"" << margin + plot / 2 << "\">ℓ</text>\n";
  out << "<text x=\"" << margin + plot - 20 << "\" y=\"" << margin + plot + 18 << "\">" << block
      << "</text>\n";
  out << "<text x=\"" << margin - 40 << "\" y=\"" << margin + 4 << "\">" << block << "</text>\n";
  const double lx = margin * 1.5 + plot;
  out << "<text x=\"" << lx << "\" y=\"" << margin << "\">Pattern / upper bound on |Z(f)|</text>\n";
  double ly = margin + 16;
  for (const LegendEntry& e : legend(coloring)) {
    out << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"14\" height=\"14\" fill=\""
        << kPalette[e.key % kPalette.size()] << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << lx + 20 << "\" y=\"" << ly + 12 << "\">" << e.label << "</text>\n";
    ly += 22;
  }
  out << "</svg>\n";
}

}  // namespace lacunary
