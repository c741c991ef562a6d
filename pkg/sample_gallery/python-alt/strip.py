import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_tick().encode(
    x="mpg:Q",
    y="origin:N",
)
chart.save("chart.html")
