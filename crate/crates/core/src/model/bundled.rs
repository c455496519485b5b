//! Compiled-in datasets: vendor roadmap tables, the six-application
//! benchmark workload and the nine reference systems.
//!
//! To update the roadmap data edit the rows below; values the report
//! inferred rather than read off a vendor roadmap go in `.inferred(..)`.

use super::MilestoneField::{NLogical, NPhysical, Year};
use super::SystemType::{EF, F, N};
use super::Technology::{NeutralAtom, Superconducting, TrappedIon};
use super::{Application, DomainTag, Milestone, PVector, SystemSpec};

fn app(id: &str, label: &str, n_qubits: u64, n_gates: f64, shots: u64, tag: DomainTag) -> Application {
    Application {
        id: id.to_string(),
        label: label.to_string(),
        pvec: PVector::new(n_qubits, n_gates).expect("bundled P-vector"),
        shots,
        domain_tag: tag,
    }
}

/// Benchmark applications A-F.
pub fn bundled_workload() -> Vec<Application> {
    use DomainTag::*;
    vec![
        app("A", "Condensed matter physics (static)", 200, 1e6, 10, CondensedMatter),
        app("B", "Condensed matter physics (dynamics)", 200, 1e6, 1_000, CondensedMatter),
        app("C", "Quantum chemistry (static)", 1_000, 1e9, 10, Chemistry),
        app("D", "Quantum chemistry (dynamics)", 1_000, 1e9, 100_000, Chemistry),
        app("E", "Quantum chemistry (static, large system)", 2_000, 1e11, 10, Chemistry),
        app("F", "High energy physics (static)", 250, 1e12, 10, Hep),
    ]
}

/// Systems 1-9: max gates {1e6, 1e9, 1e12} x clock {1 kHz, 1 MHz, 1 GHz}.
pub fn bundled_systems() -> Vec<SystemSpec> {
    let mut out = Vec::with_capacity(9);
    for max_gates in [1e6, 1e9, 1e12] {
        for clock_hz in [1e3, 1e6, 1e9] {
            out.push(SystemSpec {
                id: (out.len() + 1).to_string(),
                max_gates,
                clock_hz,
                max_qubits: None,
            });
        }
    }
    out
}

/// Every row of the ten vendor roadmap tables.
pub fn bundled_milestones() -> Vec<Milestone> {
    let ab = |id, year| Milestone::new(id, "Alice & Bob", Superconducting, year);
    let google = |id, year| Milestone::new(id, "Google Quantum AI", Superconducting, year);
    let ibm = |id, year| Milestone::new(id, "IBM Quantum", Superconducting, year);
    let iqm = |id, year| Milestone::new(id, "IQM", Superconducting, year);
    let oqc = |id, year| Milestone::new(id, "Oxford Quantum Circuits", Superconducting, year);
    let rigetti = |id, year| Milestone::new(id, "Rigetti Computing", Superconducting, year);
    let ionq = |id, year| Milestone::new(id, "IonQ", TrappedIon, year);
    let quantinuum = |id, year| Milestone::new(id, "Quantinuum", TrappedIon, year);
    let infleqtion = |id, year| Milestone::new(id, "Infleqtion", NeutralAtom, year);
    let pasqal = |id, year| Milestone::new(id, "Pasqal", NeutralAtom, year);

    vec![
        // Alice & Bob; Boson 4 prints 0 logical qubits, treated as absent.
        ab("alice-bob-boson-4-2024", 2024).named("Boson 4").typed(N).physical(1),
        ab("alice-bob-helium-2025", 2025).named("Helium").typed(EF).physical(16).logical(1).error(1e-2),
        ab("alice-bob-lithium-2027", 2027)
            .named("Lithium")
            .typed(EF)
            .physical(48)
            .logical(4)
            .error(1e-3)
            .inferred(&[Year]),
        ab("alice-bob-beryllium-2029", 2029)
            .named("Beryllium")
            .typed(EF)
            .physical(250)
            .logical(5)
            .error(1e-4)
            .inferred(&[Year]),
        ab("alice-bob-graphene-2030", 2030)
            .named("Graphene")
            .typed(F)
            .physical(2_000)
            .logical(100)
            .error(1e-6),
        // Google Quantum AI
        google("google-sycamore-2019", 2019).named("Sycamore").typed(N).physical(53),
        google("google-sycamore-2-2023", 2023).named("Sycamore-2").typed(N).physical(72),
        google("google-willow-2024", 2024).named("Willow").typed(N).physical(105).error(3e-3),
        google("google-milestone-3-2027", 2027)
            .named("Milestone 3")
            .typed(EF)
            .physical(1_000)
            .logical(5)
            .error(1e-6)
            .inferred(&[Year, NLogical]),
        google("google-milestone-4-2030", 2030)
            .named("Milestone 4")
            .typed(EF)
            .physical(10_000)
            .logical(50)
            .error(1e-6)
            .inferred(&[Year, NLogical]),
        google("google-milestone-5-2033", 2033)
            .named("Milestone 5")
            .typed(F)
            .physical(100_000)
            .logical(502)
            .error(1e-6)
            .inferred(&[Year, NLogical]),
        google("google-milestone-6-2036", 2036)
            .named("Milestone 6")
            .typed(F)
            .physical(1_000_000)
            .logical(1_545)
            .error(1e-13)
            .inferred(&[Year, NLogical]),
        // IBM Quantum
        ibm("ibm-falcon-2020", 2020).named("Falcon").typed(N).physical(27),
        ibm("ibm-eagle-2022", 2022).named("Eagle").typed(N).physical(127),
        ibm("ibm-heron-2024", 2024).named("Heron").typed(N).physical(133).gates(5_000.0),
        ibm("ibm-nighthawk-2025", 2025).named("Nighthawk").typed(N).physical(120).gates(5_000.0),
        ibm("ibm-nighthawk-2026", 2026).named("Nighthawk").typed(N).physical(120).gates(7_500.0),
        ibm("ibm-nighthawk-2027", 2027).named("Nighthawk").typed(N).physical(120).gates(10_000.0),
        ibm("ibm-nighthawk-2028", 2028).named("Nighthawk").typed(N).physical(120).gates(15_000.0),
        ibm("ibm-starling-2029", 2029)
            .named("Starling")
            .typed(F)
            .physical(8_000)
            .logical(200)
            .gates(1e8)
            .inferred(&[NPhysical]),
        // listed as "2033+"
        ibm("ibm-blue-jay-2033", 2033)
            .named("Blue Jay")
            .typed(F)
            .physical(58_000)
            .logical(2_000)
            .gates(1e9)
            .inferred(&[NPhysical]),
        // IQM
        iqm("iqm-2024", 2024).typed(N).physical(54).error(1e-3),
        iqm("iqm-2025", 2025).typed(N).physical(150).error(8e-4),
        iqm("iqm-2026", 2026).typed(N).physical(300).error(6e-4),
        iqm("iqm-2027", 2027).typed(EF).physical(1_000).logical(36).error(1e-5),
        iqm("iqm-2028", 2028).typed(EF).physical(5_000).logical(180).error(1e-6),
        iqm("iqm-2030", 2030).typed(F).physical(40_000).logical(720).error(1e-7),
        iqm("iqm-2031", 2031).typed(F).physical(100_000).logical(1_800).error(1e-8),
        iqm("iqm-2033", 2033).typed(F).physical(1_000_000).logical(7_200).error(1e-9),
        // Oxford Quantum Circuits
        oqc("oqc-sophia-2021", 2021).named("Sophia").typed(N).physical(4),
        oqc("oqc-lucy-2022", 2022).named("Lucy").typed(N).physical(8),
        oqc("oqc-toshiko-2024", 2024).named("Toshiko").typed(N).physical(32).error(1e-2),
        oqc("oqc-genesis-2025", 2025).named("Genesis").typed(EF).physical(16).logical(16).error(1e-3),
        oqc("oqc-titan-2028", 2028)
            .named("Titan")
            .typed(EF)
            .physical(2_000)
            .logical(200)
            .error(1e-6)
            .clock(1e6),
        oqc("oqc-athena-2031", 2031)
            .named("Athena")
            .typed(F)
            .physical(75_000)
            .logical(5_000)
            .error(1e-9)
            .clock(3e6),
        oqc("oqc-atlas-2034", 2034)
            .named("Atlas")
            .typed(F)
            .physical(1_000_000)
            .logical(50_000)
            .error(1e-12)
            .clock(1e7),
        // Rigetti Computing
        rigetti("rigetti-aspen-m-x-2022", 2022).named("Aspen-M-X").typed(N).physical(80).error(5e-2),
        rigetti("rigetti-ankaa-1-2023", 2023).named("Ankaa-1").typed(N).physical(84).error(5e-2),
        rigetti("rigetti-ankaa-2-2023", 2023).named("Ankaa-2").typed(N).physical(84).error(2e-2),
        rigetti("rigetti-ankaa-3-2024", 2024).named("Ankaa-3").typed(N).physical(84).error(1e-2),
        rigetti("rigetti-2025", 2025).typed(N).physical(108).error(5e-3),
        // IonQ
        ionq("ionq-2025", 2025).typed(N).physical(64).error(1e-4),
        ionq("ionq-2026", 2026).typed(EF).physical(256).logical(12).error(1e-7),
        ionq("ionq-2027", 2027).typed(EF).physical(10_000).logical(800).error(1e-7),
        ionq("ionq-2028", 2028).typed(EF).physical(20_000).logical(1_600).error(1e-7),
        ionq("ionq-2029", 2029).typed(F).physical(200_000).logical(8_000).error(1e-12),
        ionq("ionq-2030", 2030).typed(F).physical(2_000_000).logical(80_000).error(1e-12),
        // Quantinuum; Apollo's "hundreds" of logical qubits taken as 500.
        quantinuum("quantinuum-helios-2025", 2025).named("Helios").typed(EF).physical(96).logical(50).error(1e-4),
        quantinuum("quantinuum-sol-2027", 2027).named("Sol").typed(EF).physical(192).logical(100).error(1e-5),
        quantinuum("quantinuum-apollo-2029", 2029)
            .named("Apollo")
            .typed(F)
            .physical(5_000)
            .logical(500)
            .error(1e-10)
            .inferred(&[NLogical]),
        // Infleqtion
        infleqtion("infleqtion-2024", 2024).typed(N).physical(1_600).logical(2).error(5e-3),
        infleqtion("infleqtion-2026", 2026).typed(EF).physical(8_000).logical(10).depth(1e3),
        infleqtion("infleqtion-2028", 2028).typed(EF).physical(40_000).logical(100).depth(1e6),
        // Pasqal; Orion-gamma is typed "N-EF" in the source table. Lyra ">100 Hz" kept at 100 Hz.
        pasqal("pasqal-orion-gamma-2026", 2026)
            .named("Orion-\u{3b3}")
            .typed(EF)
            .physical(200)
            .logical(2)
            .error(2e-2)
            .clock(10.0),
        pasqal("pasqal-vela-2027", 2027).named("Vela").typed(EF).physical(1_000).logical(2).error(1e-3).clock(10.0),
        pasqal("pasqal-centaurus-2028", 2028)
            .named("Centaurus")
            .typed(EF)
            .physical(1_000)
            .logical(20)
            .error(1e-3)
            .clock(10.0),
        pasqal("pasqal-lyra-2029", 2029)
            .named("Lyra")
            .typed(F)
            .physical(10_000)
            .logical(200)
            .error(1e-5)
            .clock(100.0),
    ]
}
