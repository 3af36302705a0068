//! Graph builders for the supported inputs: edge lists, grayscale images and
//! planar point clouds.

mod edgelist;
mod image;
mod points;

pub use edgelist::{emit_edge_list, largest_component, parse_edge_list, EdgeList};
pub use image::{emit_pgm, image_grid_graph, parse_csv_image, parse_pgm, GrayImage, ImageGraph};
pub use points::{
    classification_rate, emit_points_csv, knn_eps_graph, parse_points_csv, sample_gaussian_mixture,
    KnnEpsParams, LabeledPoints, Point,
};
