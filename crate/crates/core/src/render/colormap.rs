//! Escape-step coloring.
//!
//! The default colormap is a fixed 256-entry RGB table (deep violet
//! through amber to warm white), committed as data so that renders are
//! reproducible byte for byte; a golden test pins spot entries and the
//! byte checksum. Escape step `n` at iteration budget `depth` selects
//! index `floor(255·n/depth)`; bounded pixels are painted black by the
//! writers, not by the table.

/// A 256-entry RGB lookup table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colormap {
    table: [[u8; 3]; 256],
}

impl Default for Colormap {
    fn default() -> Colormap {
        Colormap { table: DEFAULT }
    }
}

impl Colormap {
    pub fn entry(&self, index: u8) -> [u8; 3] {
        self.table[index as usize]
    }

    /// Index for escape step `n` out of `depth`: `floor(255·n/depth)`,
    /// saturating so analytic grids (`depth` possibly 0, escapes at 0)
    /// and step-at-depth pixels stay in range.
    pub fn index_for(n: u32, depth: u32) -> u8 {
        if depth == 0 {
            return 255;
        }
        ((255 * u64::from(n)) / u64::from(depth)).min(255) as u8
    }

    pub fn color_for(&self, n: u32, depth: u32) -> [u8; 3] {
        self.entry(Self::index_for(n, depth))
    }
}

#[rustfmt::skip]
const DEFAULT: [[u8; 3]; 256] = [
    [20, 10, 60], [21, 10, 61], [22, 10, 62], [24, 11, 63],
    [25, 11, 64], [26, 11, 65], [27, 11, 66], [28, 12, 67],
    [29, 12, 68], [31, 12, 68], [32, 12, 69], [33, 13, 70],
    [34, 13, 71], [35, 13, 72], [36, 13, 73], [38, 14, 74],
    [39, 14, 75], [40, 14, 76], [41, 14, 77], [42, 14, 78],
    [44, 15, 79], [45, 15, 80], [46, 15, 81], [47, 15, 82],
    [48, 16, 83], [49, 16, 84], [51, 16, 84], [52, 16, 85],
    [53, 17, 86], [54, 17, 87], [55, 17, 88], [56, 17, 89],
    [58, 18, 90], [59, 18, 91], [60, 18, 92], [61, 18, 93],
    [62, 18, 94], [64, 19, 95], [65, 19, 96], [66, 19, 97],
    [67, 19, 98], [68, 20, 99], [69, 20, 100], [71, 20, 100],
    [72, 20, 101], [73, 21, 102], [74, 21, 103], [75, 21, 104],
    [76, 21, 105], [78, 22, 106], [79, 22, 107], [80, 22, 108],
    [81, 22, 109], [82, 22, 110], [84, 23, 111], [85, 23, 112],
    [86, 23, 113], [87, 23, 114], [88, 24, 115], [89, 24, 116],
    [91, 24, 116], [92, 24, 117], [93, 25, 118], [94, 25, 119],
    [95, 25, 120], [96, 25, 121], [98, 26, 122], [99, 26, 123],
    [100, 26, 124], [101, 26, 125], [102, 26, 126], [104, 27, 127],
    [105, 27, 128], [106, 27, 129], [107, 27, 130], [108, 28, 131],
    [109, 28, 132], [111, 28, 132], [112, 28, 133], [113, 29, 134],
    [114, 29, 135], [115, 29, 136], [116, 29, 137], [118, 30, 138],
    [119, 30, 139], [120, 30, 140], [121, 31, 139], [123, 32, 138],
    [124, 33, 136], [126, 34, 135], [127, 35, 134], [128, 36, 133],
    [130, 37, 132], [131, 38, 131], [133, 40, 129], [134, 41, 128],
    [136, 42, 127], [137, 43, 126], [138, 44, 125], [140, 45, 124],
    [141, 46, 122], [143, 47, 121], [144, 48, 120], [145, 49, 119],
    [147, 50, 118], [148, 51, 116], [150, 52, 115], [151, 53, 114],
    [152, 54, 113], [154, 55, 112], [155, 56, 111], [157, 58, 109],
    [158, 59, 108], [160, 60, 107], [161, 61, 106], [162, 62, 105],
    [164, 63, 104], [165, 64, 102], [167, 65, 101], [168, 66, 100],
    [169, 67, 99], [171, 68, 98], [172, 69, 96], [174, 70, 95],
    [175, 71, 94], [176, 72, 93], [178, 73, 92], [179, 74, 91],
    [181, 76, 89], [182, 77, 88], [184, 78, 87], [185, 79, 86],
    [186, 80, 85], [188, 81, 84], [189, 82, 82], [191, 83, 81],
    [192, 84, 80], [193, 85, 79], [195, 86, 78], [196, 87, 76],
    [198, 88, 75], [199, 89, 74], [200, 90, 73], [202, 91, 72],
    [203, 92, 71], [205, 94, 69], [206, 95, 68], [208, 96, 67],
    [209, 97, 66], [210, 98, 65], [212, 99, 64], [213, 100, 62],
    [215, 101, 61], [216, 102, 60], [217, 103, 59], [219, 104, 58],
    [220, 105, 56], [222, 106, 55], [223, 107, 54], [224, 108, 53],
    [226, 109, 52], [227, 110, 51], [229, 112, 49], [230, 113, 48],
    [232, 114, 47], [233, 115, 46], [234, 116, 45], [236, 117, 44],
    [237, 118, 42], [239, 119, 41], [240, 120, 40], [240, 122, 42],
    [240, 123, 44], [241, 125, 46], [241, 126, 48], [241, 128, 51],
    [241, 129, 53], [241, 131, 55], [241, 132, 57], [242, 134, 59],
    [242, 135, 61], [242, 137, 63], [242, 138, 65], [242, 140, 68],
    [242, 141, 70], [243, 143, 72], [243, 144, 74], [243, 146, 76],
    [243, 148, 78], [243, 149, 80], [244, 151, 82], [244, 152, 84],
    [244, 154, 87], [244, 155, 89], [244, 157, 91], [244, 158, 93],
    [245, 160, 95], [245, 161, 97], [245, 163, 99], [245, 164, 101],
    [245, 166, 104], [245, 167, 106], [246, 169, 108], [246, 170, 110],
    [246, 172, 112], [246, 174, 114], [246, 175, 116], [247, 177, 118],
    [247, 178, 120], [247, 180, 123], [247, 181, 125], [247, 183, 127],
    [247, 184, 129], [248, 186, 131], [248, 187, 133], [248, 189, 135],
    [248, 190, 137], [248, 192, 140], [248, 193, 142], [249, 195, 144],
    [249, 196, 146], [249, 198, 148], [249, 200, 150], [249, 201, 152],
    [250, 203, 154], [250, 204, 156], [250, 206, 159], [250, 207, 161],
    [250, 209, 163], [250, 210, 165], [251, 212, 167], [251, 213, 169],
    [251, 215, 171], [251, 216, 173], [251, 218, 176], [251, 219, 178],
    [252, 221, 180], [252, 222, 182], [252, 224, 184], [252, 226, 186],
    [252, 227, 188], [253, 229, 190], [253, 230, 192], [253, 232, 195],
    [253, 233, 197], [253, 235, 199], [253, 236, 201], [254, 238, 203],
    [254, 239, 205], [254, 241, 207], [254, 242, 209], [254, 244, 212],
    [254, 245, 214], [255, 247, 216], [255, 248, 218], [255, 250, 220],
];
