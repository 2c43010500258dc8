#include "fairqa/image_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace fairqa::io {

namespace {

cv::Mat read_or_throw(const std::filesystem::path& path, int flags) {
    if (!std::filesystem::is_regular_file(path)) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    }
    cv::Mat mat = cv::imread(path.string(), flags);
    if (mat.empty()) {
        throw Error(ErrorCode::IoError, "cannot decode image '" + path.string() + "'");
    }
    if (mat.depth() != CV_8U) {
        throw Error(ErrorCode::IoError, "only 8-bit images are supported: '" + path.string() + "'");
    }
    return mat;
}

void write_or_throw(const cv::Mat& mat, const std::filesystem::path& path) {
    bool ok = false;
    try {
        ok = cv::imwrite(path.string(), mat);
    } catch (const cv::Exception& e) {
        throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "': " + e.what());
    }
    if (!ok) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
}

}  // namespace

RgbImage load_image(const std::filesystem::path& path) {
    const cv::Mat bgr = read_or_throw(path, cv::IMREAD_COLOR);
    RgbImage image(bgr.cols, bgr.rows);
    for (int y = 0; y < bgr.rows; ++y) {
        const auto* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < bgr.cols; ++x) {
            image.at(x, y) = {row[x][2], row[x][1], row[x][0]};
        }
    }
    return image;
}

void save_image(const RgbImage& image, const std::filesystem::path& path) {
    cv::Mat bgr(image.height(), image.width(), CV_8UC3);
    for (int y = 0; y < image.height(); ++y) {
        auto* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < image.width(); ++x) {
            const Rgb p = image.at(x, y);
            row[x] = cv::Vec3b(p.b, p.g, p.r);
        }
    }
    write_or_throw(bgr, path);
}

regions::RegionMask load_mask(const std::filesystem::path& path) {
    const cv::Mat gray = read_or_throw(path, cv::IMREAD_GRAYSCALE);
    regions::RegionMask mask(gray.cols, gray.rows);
    for (int y = 0; y < gray.rows; ++y) {
        const auto* row = gray.ptr<std::uint8_t>(y);
        for (int x = 0; x < gray.cols; ++x) mask.set(x, y, row[x] > kMaskThreshold);
    }
    return mask;
}

void save_mask(const regions::RegionMask& mask, const std::filesystem::path& path) {
    cv::Mat gray(mask.height(), mask.width(), CV_8UC1);
    for (int y = 0; y < mask.height(); ++y) {
        auto* row = gray.ptr<std::uint8_t>(y);
        for (int x = 0; x < mask.width(); ++x) row[x] = mask.test(x, y) ? 255 : 0;
    }
    write_or_throw(gray, path);
}

}  // namespace fairqa::io
