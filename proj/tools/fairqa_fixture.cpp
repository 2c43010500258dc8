// Writes synthetic face fixtures and matching embeddings for trying out the
// fairqa CLI without a real dataset.
#include <iostream>

#include <CLI11.hpp>

#include "fairqa/synth.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Synthetic fixture generator for fairqa", "fairqa-fixture"};
    app.require_subcommand(1);

    std::filesystem::path out_dir;
    fairqa::synth::FixtureOptions fixture;
    auto* faces = app.add_subcommand("faces", "Write synthetic faces, masks, landmarks and a manifest");
    faces->add_option("--out-dir", out_dir)->required();
    faces->add_option("--subjects", fixture.subjects)->check(CLI::PositiveNumber);
    faces->add_option("--images-per-subject", fixture.images_per_subject)->check(CLI::PositiveNumber);
    faces->add_option("--seed", fixture.seed);

    std::filesystem::path manifest_path;
    std::filesystem::path embeddings_out;
    std::size_t dimension = 64;
    std::uint64_t seed = 7;
    auto* emb = app.add_subcommand("embeddings", "Write synthetic embeddings for every manifest sample");
    emb->add_option("--manifest", manifest_path)->required();
    emb->add_option("--out", embeddings_out)->required();
    emb->add_option("--dim", dimension)->check(CLI::PositiveNumber);
    emb->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*faces) {
            const auto manifest = fairqa::synth::write_fixture(out_dir, fixture);
            std::cout << "wrote " << manifest.samples.size() << " samples to "
                      << (out_dir / "manifest.json").string() << "\n";
        } else {
            const auto manifest = fairqa::dataset::load_manifest(manifest_path);
            const auto store = fairqa::synth::make_embeddings(manifest, dimension, seed);
            fairqa::dataset::save_embeddings(store, embeddings_out);
            std::cout << "wrote " << store.size() << " embeddings to " << embeddings_out.string() << "\n";
        }
    } catch (const fairqa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
