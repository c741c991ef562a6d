import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_bar().encode(
    x="origin:N",
    y="mean(mpg):Q",
)
chart.save("chart.html")
