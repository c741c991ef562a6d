import altair as alt
from vega_datasets import data

cars = data.cars()

chart = alt.Chart(cars).mark_point(opacity=0.8).encode(
    x=alt.X("horsepower:Q", title="Horsepower"),
    y=alt.Y("mpg:Q", title="Miles per gallon"),
    tooltip=["horsepower", "mpg"],
    column="origin:N",
)
chart = chart.properties(title="Horsepower vs efficiency per origin", width=480, height=320)
chart = chart.configure_axis(labelFontSize=11, titleFontSize=13)
chart.save("chart.html")
