#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathx/image.hpp"

namespace pathx {

// One candidate tile cut from a slide. origin_x/origin_y are pixel offsets in
// the source slide; row/col index the tile grid.
struct Tile {
    std::string slide_id;
    int row = 0;
    int col = 0;
    int origin_x = 0;
    int origin_y = 0;
    Image image;
};

struct ScoreConfig {
    // Nucleus mask: blue-dominant (B > R) and darker than this luma.
    int dark_threshold = 120;
    // Connected components smaller than this many pixels are ignored.
    int min_area = 30;
    // A pixel is blank when min(R,G,B) >= this brightness.
    int blank_threshold = 220;
    // Blank fraction is scaled by this weight before subtraction.
    double blank_weight = 1000.0;
};

struct TileScore {
    long num_nuclei = 0;
    double clarity = 0.0;
    double blank_fraction = 0.0;  // raw fraction in [0, 1]
    double blank_space = 0.0;     // fraction * blank_weight
    double score = 0.0;           // num_nuclei * clarity - blank_space
};

// Count of 8-connected nucleus-like components with area >= min_area.
long count_nuclei(const Image& img, const ScoreConfig& config);

// Variance of the 3x3 Laplacian [[0,1,0],[1,-4,1],[0,1,0]] response on the
// luma image, border pixels excluded. Images with no interior score 0.
double clarity_laplacian(const Image& img);

// Fraction of pixels with min(R,G,B) >= brightness_threshold.
double blank_fraction(const Image& img, int brightness_threshold);

TileScore score_tile(const Image& img, const ScoreConfig& config);

// Highest-scoring tile; ties broken by lower origin_y, then lower origin_x,
// so the result is independent of input ordering. Throws on an empty list.
std::pair<std::size_t, TileScore> select_best_slice(const std::vector<Tile>& tiles,
                                                    const ScoreConfig& config);

// Precomputed variant used when scores were already evaluated (possibly in
// parallel); applies the same deterministic tie-break.
std::size_t select_best_index(const std::vector<Tile>& tiles, const std::vector<TileScore>& scores);

// Cuts a large image into size x size tiles on a grid, dropping right/bottom
// remainders.
std::vector<Tile> grid_tiles(const Image& slide, const std::string& slide_id, int size);

}  // namespace pathx
