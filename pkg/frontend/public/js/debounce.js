/** Trailing-edge debounce: only the last call in a burst fires. */
export function debounce(fn, ms) {
    let timer;
    const wrapped = (...args) => {
        if (timer !== undefined)
            clearTimeout(timer);
        timer = setTimeout(() => {
            timer = undefined;
            fn(...args);
        }, ms);
    };
    wrapped.cancel = () => {
        if (timer !== undefined)
            clearTimeout(timer);
        timer = undefined;
    };
    return wrapped;
}
