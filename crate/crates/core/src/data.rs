//! Datasets: the embedded fourteen-set corpus, plain-text ingestion and
//! descriptive statistics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named sample of observations, each strictly inside (0, 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    /// Corpus id (1..=14) for embedded data, `None` for external files.
    pub id: Option<u8>,
    pub name: String,
    values: Vec<f64>,
}

impl Dataset {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InsufficientData { got: 0, needed: 1 });
        }
        if let Some((i, &v)) = values
            .iter()
            .enumerate()
            .find(|(_, &v)| !(v > 0.0 && v < 1.0))
        {
            return Err(Error::OutOfRange { value: v, line: 0, position: i + 1 });
        }
        Ok(Self { id: None, name: name.into(), values })
    }

    /// Parses a plain-text file body into a dataset named `name`.
    pub fn parse(name: impl Into<String>, text: &[u8]) -> Result<Self> {
        Self::new(name, parse_values(text)?)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Ascending copy of the observations; ties keep their input order.
    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Renders the values in the input file format, one per line, with
    /// shortest round-trip formatting.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for v in &self.values {
            out.push_str(&format!("{v}\n"));
        }
        out
    }
}

/// Splits `text` on whitespace, commas and semicolons and parses every token
/// as a value in (0, 1). Lines starting with `#` are comments.
pub fn parse_values(text: &[u8]) -> Result<Vec<f64>> {
    let text = std::str::from_utf8(text)
        .map_err(|e| Error::Parse { token: format!("<invalid UTF-8: {e}>"), line: 0, position: 0 })?;
    let mut values = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let tokens = line
            .split(|c: char| c.is_whitespace() || c == ',' || c == ';')
            .filter(|t| !t.is_empty());
        for (pos, token) in tokens.enumerate() {
            let value: f64 = token.parse().map_err(|_| Error::Parse {
                token: token.to_string(),
                line: line_no + 1,
                position: pos + 1,
            })?;
            if !(value > 0.0 && value < 1.0) {
                return Err(Error::OutOfRange { value, line: line_no + 1, position: pos + 1 });
            }
            values.push(value);
        }
    }
    Ok(values)
}

/// An entry of the embedded corpus.
#[derive(Debug, Clone, Copy)]
pub struct EmbeddedDataset {
    pub id: u8,
    pub name: &'static str,
    pub description: &'static str,
    pub values: &'static [f64],
}

pub const EMBEDDED: [EmbeddedDataset; 14] = [
    EmbeddedDataset { id: 1, name: "dwelling", description: "Dwellings without basic facilities", values: &DWELLING },
    EmbeddedDataset { id: 2, name: "quality", description: "Quality of support network", values: &QUALITY },
    EmbeddedDataset { id: 3, name: "educational", description: "Educational attainment", values: &EDUCATIONAL },
    EmbeddedDataset { id: 4, name: "flood", description: "Flood data", values: &FLOOD },
    EmbeddedDataset { id: 5, name: "failures", description: "Time between failures", values: &FAILURES },
    EmbeddedDataset { id: 6, name: "covid_canada", description: "COVID-19 death rate, Canada", values: &COVID_CANADA },
    EmbeddedDataset { id: 7, name: "covid_spain_death", description: "COVID-19 death rate, Spain", values: &COVID_SPAIN_DEATH },
    EmbeddedDataset { id: 8, name: "covid_uk", description: "COVID-19 death rate, United Kingdom", values: &COVID_UK },
    EmbeddedDataset { id: 9, name: "rock", description: "Shape perimeter by squared area, petroleum rock samples", values: &ROCK },
    EmbeddedDataset { id: 10, name: "snowfall", description: "Daily snowfall amounts, non-seeded units", values: &SNOWFALL },
    EmbeddedDataset { id: 11, name: "milk", description: "Total milk production, first birth", values: &MILK },
    EmbeddedDataset { id: 12, name: "covid_spain_recovery", description: "COVID-19 recovery rate, Spain", values: &COVID_SPAIN_RECOVERY },
    EmbeddedDataset { id: 13, name: "voter", description: "Voter turnout", values: &VOTER },
    EmbeddedDataset { id: 14, name: "unit_capacity", description: "Unit capacity factors", values: &UNIT_CAPACITY },
];

impl EmbeddedDataset {
    pub fn to_dataset(&self) -> Dataset {
        Dataset { id: Some(self.id), name: self.name.to_string(), values: self.values.to_vec() }
    }
}

/// Loads embedded dataset `id` (1..=14).
pub fn load_embedded(id: u8) -> Result<Dataset> {
    EMBEDDED
        .iter()
        .find(|d| d.id == id)
        .map(EmbeddedDataset::to_dataset)
        .ok_or_else(|| Error::UnknownDataset(id.to_string()))
}

/// Looks up an embedded dataset by name, case-insensitively.
pub fn find_embedded(name: &str) -> Option<Dataset> {
    EMBEDDED
        .iter()
        .find(|d| d.name.eq_ignore_ascii_case(name))
        .map(EmbeddedDataset::to_dataset)
}

/// Summary statistics in the layout of the descriptive table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub n: usize,
    pub min: f64,
    pub mean: f64,
    pub std: f64,
    /// Undefined (None) below three observations.
    pub skewness: Option<f64>,
    /// Undefined (None) below four observations.
    pub kurtosis: Option<f64>,
    pub q25: f64,
    pub q50: f64,
    pub q75: f64,
    pub max: f64,
}

/// Descriptive statistics.
///
/// `std` uses the n−1 denominator. Skewness and kurtosis are the
/// bias-corrected sample estimators; kurtosis is reported on the raw scale
/// (about 3 for normal data), not as excess. Quartiles interpolate the sorted
/// sample linearly at position p·n + 0.5, clamped to [1, n].
pub fn describe(data: &Dataset) -> Result<DescriptiveStats> {
    let n = data.len();
    if n < 2 {
        return Err(Error::InsufficientData { got: n, needed: 2 });
    }
    let sorted = data.sorted();
    let nf = n as f64;
    let mean = sorted.iter().sum::<f64>() / nf;
    let (m2, m3, m4) = sorted.iter().fold((0.0, 0.0, 0.0), |(a, b, c), &y| {
        let d = y - mean;
        let d2 = d * d;
        (a + d2, b + d2 * d, c + d2 * d2)
    });
    let (m2, m3, m4) = (m2 / nf, m3 / nf, m4 / nf);
    if m2 <= 0.0 {
        return Err(Error::Degenerate("all observations are equal".into()));
    }
    let g1 = m3 / m2.powf(1.5);
    let g2 = m4 / (m2 * m2) - 3.0;
    let skewness = (n >= 3).then(|| g1 * (nf * (nf - 1.0)).sqrt() / (nf - 2.0));
    let kurtosis =
        (n >= 4).then(|| ((nf + 1.0) * g2 + 6.0) * (nf - 1.0) / ((nf - 2.0) * (nf - 3.0)) + 3.0);

    Ok(DescriptiveStats {
        n,
        min: sorted[0],
        mean,
        std: (m2 * nf / (nf - 1.0)).sqrt(),
        skewness,
        kurtosis,
        q25: midpoint_quantile(&sorted, 0.25),
        q50: midpoint_quantile(&sorted, 0.5),
        q75: midpoint_quantile(&sorted, 0.75),
        max: sorted[n - 1],
    })
}

/// Linear interpolation of an ascending sample at 1-based position p·n + 0.5.
pub fn midpoint_quantile(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let pos = (p * n as f64 + 0.5).clamp(1.0, n as f64);
    let lo = pos.floor() as usize;
    let frac = pos - lo as f64;
    let hi = (lo + 1).min(n);
    sorted[lo - 1] + frac * (sorted[hi - 1] - sorted[lo - 1])
}

const DWELLING: [f64; 31] = [
    0.008, 0.007, 0.002, 0.094, 0.123, 0.023,
    0.005, 0.005, 0.057, 0.004, 0.005, 0.001,
    0.004, 0.035, 0.002, 0.006, 0.064, 0.025,
    0.112, 0.118, 0.001, 0.259, 0.001, 0.023,
    0.009, 0.015, 0.002, 0.003, 0.049, 0.005,
    0.001,
];

const QUALITY: [f64; 20] = [
    0.98, 0.96, 0.95, 0.94, 0.93, 0.8,
    0.82, 0.85, 0.88, 0.89, 0.78, 0.92,
    0.92, 0.9, 0.96, 0.96, 0.94, 0.77,
    0.95, 0.91,
];

const EDUCATIONAL: [f64; 36] = [
    0.84, 0.86, 0.8, 0.92, 0.67, 0.59,
    0.43, 0.94, 0.82, 0.91, 0.91, 0.81,
    0.86, 0.76, 0.86, 0.76, 0.85, 0.88,
    0.63, 0.89, 0.89, 0.94, 0.74, 0.42,
    0.81, 0.81, 0.93, 0.55, 0.92, 0.9,
    0.63, 0.84, 0.89, 0.42, 0.82, 0.92,
];

const FLOOD: [f64; 20] = [
    0.26, 0.27, 0.3, 0.32, 0.32, 0.34,
    0.38, 0.38, 0.39, 0.4, 0.41, 0.42,
    0.42, 0.42, 0.45, 0.48, 0.49, 0.61,
    0.65, 0.74,
];

const FAILURES: [f64; 23] = [
    0.216, 0.015, 0.4082, 0.0746, 0.0358, 0.0199,
    0.0402, 0.0101, 0.0605, 0.0954, 0.1359, 0.0273,
    0.0491, 0.3465, 0.007, 0.656, 0.106, 0.0062,
    0.4992, 0.0614, 0.532, 0.0347, 0.1921,
];

const COVID_CANADA: [f64; 56] = [
    0.1622, 0.1159, 0.1897, 0.126, 0.3025, 0.219,
    0.2075, 0.2241, 0.2163, 0.1262, 0.1627, 0.2591,
    0.1989, 0.3053, 0.217, 0.2241, 0.2174, 0.2541,
    0.1997, 0.3333, 0.2594, 0.223, 0.229, 0.1536,
    0.2024, 0.2931, 0.2739, 0.2607, 0.2736, 0.2323,
    0.1563, 0.2677, 0.2181, 0.3019, 0.2136, 0.2281,
    0.2346, 0.1888, 0.2729, 0.2162, 0.2746, 0.2936,
    0.3259, 0.2242, 0.181, 0.2679, 0.2296, 0.2992,
    0.2464, 0.2576, 0.2338, 0.1499, 0.2075, 0.1834,
    0.3347, 0.2362,
];

const COVID_SPAIN_DEATH: [f64; 66] = [
    0.333, 0.5, 0.5, 0.5714, 0.25, 0.3469,
    0.4839, 0.2105, 0.2311, 0.3127, 0.48, 0.2749,
    0.3625, 0.3922, 0.3414, 0.3711, 0.4288, 0.4077,
    0.3939, 0.4076, 0.4079, 0.4408, 0.4046, 0.3836,
    0.3545, 0.3275, 0.3162, 0.315, 0.3053, 0.293,
    0.279, 0.2685, 0.2588, 0.2492, 0.2481, 0.2453,
    0.2355, 0.2285, 0.2241, 0.2193, 0.2162, 0.2153,
    0.2129, 0.2098, 0.2037, 0.2066, 0.2087, 0.2038,
    0.2029, 0.2023, 0.1993, 0.1962, 0.1711, 0.1678,
    0.1646, 0.1629, 0.1613, 0.1544, 0.151, 0.1484,
    0.1465, 0.1453, 0.1436, 0.142, 0.1396, 0.1372,
];

const COVID_UK: [f64; 60] = [
    0.1292, 0.3805, 0.4049, 0.2564, 0.3091, 0.2413,
    0.139, 0.1127, 0.3547, 0.3126, 0.2991, 0.2428,
    0.2942, 0.0807, 0.1285, 0.2775, 0.3311, 0.2825,
    0.2559, 0.2756, 0.1652, 0.1072, 0.3383, 0.3575,
    0.2708, 0.2649, 0.0961, 0.1565, 0.158, 0.1981,
    0.4154, 0.399, 0.2483, 0.1762, 0.176, 0.1543,
    0.3238, 0.3771, 0.4132, 0.4602, 0.352, 0.1882,
    0.1742, 0.4033, 0.4999, 0.393, 0.3963, 0.396,
    0.2029, 0.1791, 0.4768, 0.5331, 0.3739, 0.4015,
    0.3828, 0.1718, 0.1657, 0.4542, 0.4772, 0.3402,
];

const ROCK: [f64; 48] = [
    0.0903296, 0.203654, 0.204314, 0.280887, 0.197653, 0.328641,
    0.148622, 0.162394, 0.262727, 0.179455, 0.326635, 0.230081,
    0.183312, 0.150944, 0.200071, 0.191802, 0.154192, 0.464125,
    0.117063, 0.148141, 0.14481, 0.133083, 0.276016, 0.420477,
    0.122417, 0.228595, 0.113852, 0.225214, 0.176969, 0.200744,
    0.167045, 0.231623, 0.91029, 0.341273, 0.438712, 0.262651,
    0.189651, 0.172567, 0.240077, 0.311646, 0.163586, 0.182453,
    0.164127, 0.153481, 0.161865, 0.276016, 0.253832, 0.200447,
];

const SNOWFALL: [f64; 30] = [
    0.03, 0.02, 0.015, 0.045, 0.1, 0.1,
    0.125, 0.19, 0.39, 0.11, 0.07, 0.01,
    0.055, 0.22, 0.08, 0.005, 0.125, 0.035,
    0.085, 0.06, 0.01, 0.065, 0.02, 0.26,
    0.03, 0.015, 0.025, 0.01, 0.495, 0.085,
];

const MILK: [f64; 107] = [
    0.4365, 0.426, 0.514, 0.6907, 0.7471, 0.2605,
    0.6196, 0.8781, 0.499, 0.6058, 0.6891, 0.577,
    0.5394, 0.1479, 0.2356, 0.6012, 0.1525, 0.5483,
    0.6927, 0.7261, 0.3323, 0.0671, 0.2361, 0.48,
    0.5707, 0.7131, 0.5853, 0.6768, 0.535, 0.4151,
    0.6789, 0.4576, 0.3259, 0.2303, 0.7687, 0.4371,
    0.3383, 0.6114, 0.348, 0.4564, 0.7804, 0.3406,
    0.4823, 0.5912, 0.5744, 0.5481, 0.1131, 0.729,
    0.0168, 0.5529, 0.453, 0.3891, 0.4752, 0.3134,
    0.3175, 0.1167, 0.675, 0.5113, 0.5447, 0.4143,
    0.5627, 0.515, 0.0776, 0.3945, 0.4553, 0.447,
    0.5285, 0.5232, 0.6465, 0.065, 0.8492, 0.8147,
    0.3627, 0.3906, 0.4438, 0.4612, 0.3188, 0.216,
    0.6707, 0.622, 0.5629, 0.4675, 0.6844, 0.3413,
    0.4332, 0.0854, 0.3821, 0.4694, 0.3635, 0.4111,
    0.5349, 0.3751, 0.1546, 0.4517, 0.2681, 0.4049,
    0.5553, 0.5878, 0.4741, 0.3598, 0.7629, 0.5941,
    0.6174, 0.686, 0.0609, 0.6488, 0.2747,
];

const COVID_SPAIN_RECOVERY: [f64; 66] = [
    0.667, 0.5, 0.5, 0.4286, 0.75, 0.6531,
    0.5161, 0.7895, 0.7689, 0.6873, 0.52, 0.7251,
    0.6375, 0.6078, 0.6289, 0.5712, 0.5923, 0.6061,
    0.5924, 0.5921, 0.5592, 0.5954, 0.6164, 0.6455,
    0.6725, 0.6838, 0.685, 0.6947, 0.721, 0.7315,
    0.7412, 0.7508, 0.7519, 0.7547, 0.7645, 0.7715,
    0.7759, 0.7807, 0.7838, 0.7847, 0.7871, 0.7902,
    0.7934, 0.7913, 0.7962, 0.7971, 0.7977, 0.8007,
    0.8038, 0.8289, 0.8322, 0.8354, 0.8371, 0.8387,
    0.8456, 0.849, 0.8535, 0.8547, 0.8564, 0.858,
    0.8604, 0.8628, 0.6586, 0.707, 0.7963, 0.8516,
];

const VOTER: [f64; 38] = [
    0.92, 0.76, 0.88, 0.68, 0.47, 0.53,
    0.66, 0.62, 0.85, 0.64, 0.69, 0.75,
    0.76, 0.58, 0.7, 0.81, 0.63, 0.67,
    0.73, 0.53, 0.77, 0.55, 0.57, 0.9,
    0.63, 0.79, 0.82, 0.78, 0.68, 0.49,
    0.66, 0.53, 0.72, 0.87, 0.45, 0.86,
    0.68, 0.65,
];

const UNIT_CAPACITY: [f64; 23] = [
    0.853, 0.759, 0.866, 0.809, 0.717, 0.544,
    0.492, 0.403, 0.344, 0.213, 0.116, 0.116,
    0.092, 0.07, 0.059, 0.048, 0.036, 0.029,
    0.021, 0.014, 0.011, 0.008, 0.006,
];

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn corpus_counts() {
        let counts: Vec<usize> = EMBEDDED.iter().map(|d| d.values.len()).collect();
        assert_eq!(counts, vec![31, 20, 36, 20, 23, 56, 66, 60, 48, 30, 107, 66, 38, 23]);
        for d in &EMBEDDED {
            assert!(d.values.iter().all(|&v| v > 0.0 && v < 1.0), "{}", d.name);
        }
    }

    #[test]
    fn flood_layout() {
        let d = load_embedded(4).unwrap();
        assert_eq!(d.len(), 20);
        assert_eq!(&d.values()[..3], &[0.26, 0.27, 0.30]);
        assert_eq!(*d.values().last().unwrap(), 0.74);
    }

    #[test]
    fn dwelling_and_rock_extremes() {
        let d = load_embedded(1).unwrap();
        assert_eq!(d.len(), 31);
        assert_eq!(d.sorted()[30], 0.259);
        let rock = load_embedded(9).unwrap();
        assert_eq!(rock.sorted().last().copied(), Some(0.91029));
    }

    #[test]
    fn unknown_ids_and_names() {
        assert!(matches!(load_embedded(0), Err(Error::UnknownDataset(_))));
        assert!(matches!(load_embedded(15), Err(Error::UnknownDataset(_))));
        assert!(find_embedded("flood").is_some());
        assert!(find_embedded("FLOOD").is_some());
        assert!(find_embedded("nope").is_none());
    }

    #[test]
    fn parse_trailing_comma() {
        assert_eq!(parse_values(b"0.223,").unwrap(), vec![0.223]);
        assert_eq!(parse_values(b"0.5 0.25\n0.75").unwrap(), vec![0.5, 0.25, 0.75]);
        assert_eq!(
            parse_values(b"# header\n0.1;0.2,\t0.3\n\n  # indented comment\n0.4").unwrap(),
            vec![0.1, 0.2, 0.3, 0.4]
        );
    }

    #[test]
    fn parse_errors_name_the_token() {
        match parse_values(b"0.1 0.2\n0.3 abc") {
            Err(Error::Parse { token, line, position }) => {
                assert_eq!(token, "abc");
                assert_eq!((line, position), (2, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_values(b"1.2"), Err(Error::OutOfRange { .. })));
        assert!(matches!(parse_values(b"0.5 0"), Err(Error::OutOfRange { .. })));
        assert!(matches!(parse_values(b"1"), Err(Error::OutOfRange { .. })));
        assert!(parse_values(&[0xff, 0xfe]).is_err());
    }

    #[test]
    fn flood_quartiles() {
        let s = describe(&load_embedded(4).unwrap()).unwrap();
        assert_abs_diff_eq!(s.q25, 0.33, epsilon = 1e-12);
        assert_abs_diff_eq!(s.q50, 0.405, epsilon = 1e-12);
        assert_abs_diff_eq!(s.q75, 0.465, epsilon = 1e-12);
    }

    #[test]
    fn two_point_std() {
        let d = Dataset::new("pair", vec![0.25, 0.75]).unwrap();
        let s = describe(&d).unwrap();
        assert_abs_diff_eq!(s.mean, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(s.std, 0.353_553_390_593_273_8, epsilon = 1e-15);
        assert_eq!((s.skewness, s.kurtosis), (None, None));
        let four = describe(&Dataset::new("four", vec![0.25, 0.75, 0.25, 0.75]).unwrap()).unwrap();
        assert_abs_diff_eq!(four.skewness.unwrap(), 0.0, epsilon = 1e-12);
        assert!(four.kurtosis.is_some());
    }

    #[test]
    fn dwelling_moments_match_direct_sums() {
        let d = load_embedded(1).unwrap();
        let s = describe(&d).unwrap();
        // independent two-pass computation of the corrected estimators
        let v = d.values();
        let n = v.len() as f64;
        let mean = v.iter().sum::<f64>() / n;
        let var = v.iter().map(|y| (y - mean).powi(2)).sum::<f64>() / (n - 1.0);
        let sd = var.sqrt();
        let skew = n / ((n - 1.0) * (n - 2.0)) * v.iter().map(|y| ((y - mean) / sd).powi(3)).sum::<f64>();
        let kurt_excess = n * (n + 1.0) / ((n - 1.0) * (n - 2.0) * (n - 3.0))
            * v.iter().map(|y| ((y - mean) / sd).powi(4)).sum::<f64>()
            - 3.0 * (n - 1.0).powi(2) / ((n - 2.0) * (n - 3.0));
        assert_abs_diff_eq!(s.mean, mean, epsilon = 1e-15);
        assert_abs_diff_eq!(s.std, sd, epsilon = 1e-14);
        assert_abs_diff_eq!(s.skewness.unwrap(), skew, epsilon = 1e-10);
        assert_abs_diff_eq!(s.kurtosis.unwrap(), kurt_excess + 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(s.skewness.unwrap(), 2.5981, epsilon = 1e-3);
        assert_abs_diff_eq!(s.kurtosis.unwrap(), 10.9552, epsilon = 1e-3);
    }

    #[test]
    fn describe_rejects_constant_data() {
        let d = Dataset::new("flat", vec![0.5; 6]).unwrap();
        assert!(matches!(describe(&d), Err(Error::Degenerate(_))));
    }

    #[test]
    fn dataset_new_validates() {
        assert!(Dataset::new("e", vec![]).is_err());
        assert!(Dataset::new("x", vec![0.2, 1.0]).is_err());
        assert!(Dataset::new("x", vec![f64::NAN]).is_err());
    }

    proptest! {
        #[test]
        fn text_roundtrip(values in proptest::collection::vec(1e-9f64..0.999_999_999, 1..60)) {
            let d = Dataset::new("rt", values).unwrap();
            let back = Dataset::parse("rt", d.to_text().as_bytes()).unwrap();
            prop_assert_eq!(back.values(), d.values());
        }

        #[test]
        fn describe_is_permutation_invariant(
            values in proptest::collection::vec(0.001f64..0.999, 5..40),
            seed in any::<u64>(),
        ) {
            let d = Dataset::new("p", values.clone()).unwrap();
            let mut shuffled = values;
            // deterministic Fisher–Yates driven by an LCG
            let mut state = seed | 1;
            for i in (1..shuffled.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            let e = Dataset::new("p", shuffled).unwrap();
            if let (Ok(a), Ok(b)) = (describe(&d), describe(&e)) {
                prop_assert_eq!(a.min, b.min);
                prop_assert_eq!(a.max, b.max);
                prop_assert_eq!(a.q25, b.q25);
                prop_assert_eq!(a.q50, b.q50);
                prop_assert_eq!(a.q75, b.q75);
                prop_assert!((a.mean - b.mean).abs() < 1e-14);
                prop_assert!((a.std - b.std).abs() < 1e-12);
                prop_assert!((a.skewness.unwrap() - b.skewness.unwrap()).abs() < 1e-8);
                prop_assert!((a.kurtosis.unwrap() - b.kurtosis.unwrap()).abs() < 1e-8);
            }
        }
    }
}
