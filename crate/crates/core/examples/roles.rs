//! Compare roles pairwise and group them into twisted-equivalence classes.

use gamesym::fixtures::fixture;
use gamesym::report::{relation_result_table, role_classes_table};
use gamesym::roles::{role_relation, tr_equivalence_classes, RoleRef, RoleRelation};

fn main() -> gamesym::Result<()> {
    let g = fixture("tnotrans4")?;
    let x = RoleRef { owner: 0, counterpart: 2 };
    let y = RoleRef { owner: 2, counterpart: 0 };
    for rel in RoleRelation::ALL {
        let r = role_relation(&g, rel, x, y)?;
        print!("{}", relation_result_table(&g, &format!("{x} {} {y}", rel.name()), &r));
    }
    print!("{}", role_classes_table(&tr_equivalence_classes(&g)));
    Ok(())
}
