//! Brent's cycle detection for iterated maps on finite sets.

/// Tail and cycle length of `x_0, s(x_0), s(s(x_0)), ...`.
///
/// `tail` is the index of the first element that lies on the cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleShape {
    pub tail: usize,
    pub cycle: usize,
}

pub fn brent<T, E>(start: T, mut successor: impl FnMut(&T) -> Result<T, E>) -> Result<CycleShape, E>
where
    T: Clone + PartialEq,
{
    let mut power = 1;
    let mut cycle = 1;
    let mut tortoise = start.clone();
    let mut hare = successor(&start)?;
    while tortoise != hare {
        if power == cycle {
            tortoise = hare.clone();
            power *= 2;
            cycle = 0;
        }
        hare = successor(&hare)?;
        cycle += 1;
    }
    let mut tortoise = start.clone();
    let mut hare = start;
    for _ in 0..cycle {
        hare = successor(&hare)?;
    }
    let mut tail = 0;
    while tortoise != hare {
        tortoise = successor(&tortoise)?;
        hare = successor(&hare)?;
        tail += 1;
    }
    Ok(CycleShape { tail, cycle })
}
