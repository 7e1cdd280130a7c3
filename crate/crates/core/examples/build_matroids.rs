//! Build matroids from each kind of description, then inspect and contract them.

use mason_clc::{ElementSet, Matroid, MatroidError, MatroidSpec};

fn describe(name: &str, m: &Matroid) -> Result<(), MatroidError> {
    println!(
        "{name}: {} elements, rank {}, counts {:?}",
        m.size(),
        m.rank(),
        m.count_independent_by_size()?
    );
    Ok(())
}

fn main() -> Result<(), MatroidError> {
    let u23 = Matroid::uniform(2, 3)?;
    describe("U(2,3)", &u23)?;

    // Elements are the edges in order; vertices are 0-based.
    let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    describe("K4", &k4)?;

    let fano_columns: Vec<Vec<num_bigint::BigInt>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
        .iter()
        .map(|c| c.iter().map(|&x| x.into()).collect())
        .collect();
    let fano = Matroid::linear(2, &fano_columns)?;
    describe("Fano", &fano)?;

    let pair_plus_one = Matroid::from_independence_family(3, [vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![2, 3]])?;
    describe("parallel pair plus a coloop", &pair_plus_one)?;
    let partition = pair_plus_one.parallel_partition()?;
    println!("  parallel classes: {:?}", partition.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    match Matroid::from_independence_family(3, [vec![], vec![1], vec![2], vec![3], vec![1, 2]]) {
        Err(e) => println!("rejected family: {e}"),
        Ok(_) => unreachable!(),
    }

    let contracted = k4.contract(ElementSet::from_elements([1, 2]))?;
    describe("K4 / {1,2}", &contracted)?;
    println!("  loops: {}", contracted.loops());

    let spec: MatroidSpec = serde_json::from_str(r#"{"kind": "uniform", "r": 3, "n": 5}"#).expect("valid JSON");
    describe("from JSON", &spec.build()?)?;
    println!("  as JSON: {}", serde_json::to_string(&k4.to_spec()?).expect("serializes"));
    Ok(())
}
