#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "memesim/eval.hpp"
#include "memesim/image.hpp"
#include "memesim/inpaint.hpp"
#include "memesim/rng.hpp"

namespace memesim {

enum class RefKind { Template, Element };

std::string_view ref_kind_name(RefKind k);

/// Image plus a coverage mask (1 = sprite pixel). Templates are fully covered.
struct Sprite {
  RasterImage image;
  std::vector<std::uint8_t> alpha;
};

struct ReferenceSpec {
  std::string ref_id;
  RefKind kind = RefKind::Template;
  std::string path;  // relative to the corpus root
  int attempt = 0;   // distinctness regeneration counter
};

struct ReferenceLibrary {
  std::uint64_t seed = 0;
  std::vector<ReferenceSpec> refs;
  std::map<std::string, Sprite> images;  // by ref_id

  const ReferenceSpec& spec(const std::string& ref_id) const;
  const ReferenceSpec* find_by_path(const std::string& path) const;
  std::vector<std::string> ids(RefKind kind) const;
};

/// Pixel generators. All randomness comes from Rng(seed, tag) streams.
/// Templates of one `family` share their scene geometry and palette and differ
/// by an additive `tone` offset and the noise field. An empty family gives a
/// scene of its own.
RasterImage render_template(std::uint64_t seed, const std::string& tag, const std::string& family = {}, double tone = 0.0);
Sprite render_element(std::uint64_t seed, const std::string& tag);
/// Plain ground with mild noise and at most a faint gradient.
RasterImage render_blank(std::uint64_t seed, const std::string& tag, int w, int h);
/// Glyph-like strokes inside `band`; pixels outside the band are untouched.
void draw_text_band(RasterImage& canvas, const BBox& band, Rng& rng);
/// Alpha-keyed paste of a scaled (nearest), optionally mirrored sprite with its
/// top-left at (x, y); clipped to the canvas.
void paste_sprite(RasterImage& canvas, const Sprite& sprite, double scale, bool flip, int x, int y);

struct CorpusParams {
  int n_templates = 120;
  int n_elements = 40;
  int templates_per_family = 3;    // tonal variants of one scene
  double family_tone_step = 15.0;  // offset between neighbouring variants
  int n_pairs = 600;  // per task
  int ratio_unrelated = 4;  // unrelated pairs per related pair
  double min_template_distance = 0.05;
  int max_regenerations = 100;
  double element_scale_min = 0.5;
  double element_scale_max = 1.5;
  bool element_flip = true;
  double crop_max = 0.05;           // per side, fraction of the dimension
  int brightness_jitter = 3;        // additive, per channel
  double tm_scale_min = 0.7;        // template-meme rescale range
  double tm_scale_max = 1.0;
  double blank_panel_prob = 0.35;
  int blank_segments = 500;
  std::uint64_t blank_seed = 7;
  double blank_fraction = 0.3;

  nlohmann::json to_json() const;
};

/// Renders templates and elements. Templates are regenerated (new attempt
/// stream) until every pair has built-in embedding cosine distance at least
/// `min_template_distance`.
ReferenceLibrary generate_references(std::uint64_t seed, int n_templates, int n_elements, const CorpusParams& params = {},
                                     unsigned jobs = 1);

struct InsertSpec {
  std::string element;  // ref id, or "sprite:<tag>" for a non-library sprite
  double scale = 1.0;
  bool flip = false;
  int x = 0;
  int y = 0;
};

struct PanelSpec {
  std::string source;  // ref id, "scene:<tag>" or "blank:<tag>"
  BBox box;            // content area; a 2 px outline surrounds it
};

struct MemeRecipe {
  std::string meme_id;
  Task task = Task::TM;
  std::string kind;  // "template" | "panel" | "element"
  std::string base;  // ref id or "scene:<tag>"; empty for panel layouts
  int width = 0;
  int height = 0;
  BBox crop;        // region of the base used (base pixels), template kind only
  double scale = 1.0;  // applied to the crop, template kind only
  int brightness = 0;
  std::vector<InsertSpec> inserts;
  std::vector<PanelSpec> panels;
  std::vector<BBox> text_bands;

  /// Library references whose pixels appear in the meme.
  std::set<std::string> references() const;
  nlohmann::json to_json() const;
  static MemeRecipe from_json(const nlohmann::json& j);
};

struct RenderedMeme {
  RasterImage image;
  TextMask mask;
};

/// Deterministic from (recipe, library, seed).
RenderedMeme render_meme(const MemeRecipe& recipe, const ReferenceLibrary& lib, std::uint64_t seed);

/// Label implied by the recipe: TM related iff base == r; MM related iff r is
/// the base, an insert or a panel.
PairLabel audit_label(const MemeRecipe& recipe, const std::string& r_id, Task task);

struct GeneratedPair {
  LabeledPair pair;
  MemeRecipe recipe;
  std::string r_id;
};

/// Related pairs reuse r; unrelated pairs come from memes built on the
/// `ratio_unrelated` references most similar to r (built-in embedding).
/// Throws RatioInfeasible when n_pairs does not split at 1:ratio or the
/// library cannot supply the references.
std::vector<GeneratedPair> generate_pairs(const ReferenceLibrary& lib, Task task, int n_pairs, int ratio_unrelated,
                                          std::uint64_t seed, const CorpusParams& params = {});

/// JSONL rows {"pair_id","m","r","label","task"}; paths relative to `root`
/// (defaults to the manifest's directory parent). Unknown fields, bad enums and
/// duplicate ids are rejected; missing files throw MissingFile.
std::vector<LabeledPair> load_manifest(const std::filesystem::path& path, const std::filesystem::path& root = {},
                                       bool check_files = true);
std::string manifest_jsonl(const std::vector<LabeledPair>& pairs);

struct BlankSegmentSpec {
  std::string path;  // relative to the corpus root
  int label = 0;     // kBlankClass | kNonBlankClass
};

/// Labeled segment set for the blank filter: blanks are near-uniform fills,
/// non-blanks are crops of textured scenes.
std::vector<std::pair<BlankSegmentSpec, RasterImage>> generate_blank_segments(std::uint64_t seed, int n, double blank_fraction);

struct CorpusWriteStats {
  int files = 0;
  int rewritten = 0;
};

struct CorpusLayout {
  static constexpr const char* kLibraryIndex = "library/index.jsonl";
  static constexpr const char* kBlankManifest = "blank/manifest.jsonl";
  static std::string manifest(Task t) { return t == Task::TM ? "manifests/tm.jsonl" : "manifests/mm.jsonl"; }
  static std::string recipes(Task t) { return t == Task::TM ? "manifests/tm_recipes.jsonl" : "manifests/mm_recipes.jsonl"; }
};

/// Generates the full corpus under `root`. Files whose bytes already match are
/// left untouched; stats.rewritten == 0 means the corpus was already identical.
CorpusWriteStats write_corpus(const std::filesystem::path& root, std::uint64_t seed, const CorpusParams& params, unsigned jobs);

/// Writes `bytes` unless the file already holds exactly them. Returns true on write.
bool write_if_changed(const std::filesystem::path& path, const std::string& bytes);
bool write_if_changed(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace memesim
